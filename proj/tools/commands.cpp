#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "psl/analysis.hpp"
#include "psl/compiler.hpp"
#include "psl/format.hpp"
#include "psl/generator.hpp"
#include "psl/json_io.hpp"
#include "psl/parser.hpp"
#include "psl/petri.hpp"
#include "psl/render.hpp"
#include "psl/stats.hpp"
#include "psl/stylesheet.hpp"

namespace psl::cli
{

namespace
{

namespace fs = std::filesystem;

// Signals an exit code after the message has been printed.
struct Exit
{
  int code;
};

struct Options
{
  std::string file;
  std::string style;
  std::string out;
  bool json = false;
  bool write = false;
  std::uint64_t seed = 42;
  long count = 1000;
  int depth = 8;
};

std::string read_input(const std::string & path, std::ostream & err)
{
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << path << ": cannot read file\n";
    throw Exit{usage_error};
  }
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_file(const fs::path & path, const std::string & text, std::ostream & err)
{
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  f << text;
  f.close();
  if (!f) {
    err << path.string() << ": cannot write file\n";
    throw Exit{usage_error};
  }
}

Stylesheet load_style(const Options & o, std::ostream & err)
{
  if (o.style.empty()) return Stylesheet::defaults();
  const std::string text = read_input(o.style, err);
  try {
    return parse_stylesheet(text);
  } catch (const StylesheetError & e) {
    err << o.style << ": " << e.what() << "\n";
    throw Exit{usage_error};
  }
}

void print(const Options & o, const Diagnostics & diags, std::ostream & out, std::ostream & err)
{
  for (const auto & d : diags) {
    if (o.json) {
      out << to_json(d).dump() << "\n";
    } else {
      err << o.file << ":" << d.span.begin << ": " << d.code << " " << d.message << "\n";
    }
  }
}

Storyboard parse_or_exit(const Options & o, const std::string & text, std::ostream & out, std::ostream & err)
{
  auto parsed = parse_storyboard(text);
  if (!parsed.value) {
    print(o, parsed.diagnostics, out, err);
    throw Exit{input_error};
  }
  return std::move(*parsed.value);
}

// Parses and validates; warnings go to stderr, errors end the command.
Storyboard load_valid(const Options & o, std::ostream & out, std::ostream & err)
{
  Options quiet = o;
  quiet.json = false;
  const std::string text = read_input(o.file, err);
  Storyboard sb = parse_or_exit(quiet, text, out, err);
  const Diagnostics diags = validate(sb);
  print(quiet, diags, out, err);
  if (has_errors(diags)) throw Exit{input_error};
  return sb;
}

void emit(const Options & o, const nlohmann::json & j, std::ostream & out, std::ostream & err)
{
  const std::string text = j.dump(2) + "\n";
  if (o.out.empty()) {
    out << text;
  } else {
    write_file(o.out, text, err);
  }
}

// Comment lines and blank lines that open the file survive formatting.
std::string leading_comments(const std::string & text)
{
  std::size_t pos = 0;
  bool any_comment = false;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    const std::string_view line(text.data() + pos, end - pos);
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] != '#') break;
    any_comment |= first != std::string_view::npos;
    pos = std::min(end + 1, text.size());
  }
  if (!any_comment) return {};
  std::string block = text.substr(0, pos);
  if (block.back() != '\n') block += '\n';
  return block;
}

int cmd_check(const Options & o, std::ostream & out, std::ostream & err)
{
  const std::string text = read_input(o.file, err);
  auto parsed = parse_storyboard(text);
  Diagnostics diags = parsed.diagnostics;
  if (parsed.value) {
    const Diagnostics more = validate(*parsed.value);
    diags.insert(diags.end(), more.begin(), more.end());
  }
  print(o, diags, out, err);
  return has_errors(diags) ? input_error : ok;
}

int cmd_fmt(const Options & o, std::ostream & out, std::ostream & err)
{
  const std::string text = read_input(o.file, err);
  const Storyboard sb = parse_or_exit(o, text, out, err);
  const std::string formatted = leading_comments(text) + format(sb) + "\n";
  if (!o.write) {
    out << formatted;
  } else if (o.file == "-") {
    err << "--write needs a file\n";
    return usage_error;
  } else if (formatted != text) {
    write_file(o.file, formatted, err);
  }
  return ok;
}

int cmd_ast(const Options & o, std::ostream & out, std::ostream & err)
{
  const Storyboard sb = parse_or_exit(o, read_input(o.file, err), out, err);
  emit(o, to_json(sb), out, err);
  return ok;
}

template <typename F>
int with_compile_errors(F && f, std::ostream & err, const std::string & file)
{
  try {
    return f();
  } catch (const CompileError & e) {
    for (const auto & d : e.diagnostics()) err << file << ":" << d.span.begin << ": " << d.code << " " << d.message << "\n";
    return input_error;
  }
}

void print_warnings(const Options & o, const Diagnostics & warnings, std::ostream & err)
{
  for (const auto & d : warnings) err << o.file << ":" << d.span.begin << ": " << d.code << " " << d.message << "\n";
}

int cmd_compile(const Options & o, std::ostream & out, std::ostream & err)
{
  const Stylesheet style = load_style(o, err);
  const Storyboard sb = load_valid(o, out, err);
  return with_compile_errors(
    [&] {
      const CompiledStoryboard c = compile(sb, style);
      print_warnings(o, c.warnings, err);
      emit(o, petri::to_json(c.net), out, err);
      return ok;
    },
    err, o.file);
}

int cmd_simulate(const Options & o, std::ostream & out, std::ostream & err)
{
  const Stylesheet style = load_style(o, err);
  const Storyboard sb = load_valid(o, out, err);
  return with_compile_errors(
    [&] {
      const Timeline t = timeline(sb, style);
      print_warnings(o, t.warnings, err);
      emit(o, to_json(t), out, err);
      return ok;
    },
    err, o.file);
}

int cmd_render(const Options & o, std::ostream & out, std::ostream & err)
{
  const Stylesheet style = load_style(o, err);
  const Storyboard sb = load_valid(o, out, err);
  return with_compile_errors(
    [&] {
      const auto frames = render_storyboard(sb, style);
      std::error_code ec;
      fs::create_directories(o.out, ec);
      if (ec || !fs::is_directory(o.out)) {
        err << o.out << ": cannot create directory\n";
        return static_cast<int>(usage_error);
      }
      for (const auto & f : frames) {
        write_file(fs::path(o.out) / f.filename, f.svg, err);
        out << (fs::path(o.out) / f.filename).string() << "\n";
      }
      return static_cast<int>(ok);
    },
    err, o.file);
}

int cmd_stats(const Options & o, std::ostream & out, std::ostream & err)
{
  const Storyboard sb = load_valid(o, out, err);
  emit(o, to_json(shot_stats(sb)), out, err);
  return ok;
}

int cmd_fuzz(const Options & o, std::ostream & out, std::ostream & err)
{
  if (o.count < 1) {
    err << "--count must be at least 1\n";
    return usage_error;
  }
  std::mt19937_64 seeds(o.seed);
  long failures = 0;
  for (long i = 0; i < o.count; ++i) {
    const std::string sentence = generate_sentence(seeds(), o.depth);
    if (auto why = roundtrip_failure(sentence)) {
      ++failures;
      out << "FAIL " << i << ": " << *why << "\n" << sentence << "\n";
    }
  }
  out << "fuzz: " << (o.count - failures) << "/" << o.count << " round-trips passed (seed " << o.seed << ")\n";
  return failures == 0 ? ok : input_error;
}

}  // namespace

int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
  CLI::App app{"Prose storyboard toolchain", "psl"};
  app.require_subcommand(1);
  Options o;

  auto file_command = [&](const char * name, const char * help) {
    CLI::App * sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "Storyboard file, or - for standard input")->required();
    return sub;
  };
  auto add_style = [&](CLI::App * sub) { sub->add_option("--style", o.style, "Stylesheet overlaying the defaults"); };

  CLI::App * check = file_command("check", "Parse and validate; report diagnostics");
  check->add_flag("--json", o.json, "One JSON object per diagnostic on standard output");
  CLI::App * fmt = file_command("fmt", "Print the canonical form");
  fmt->add_flag("--write", o.write, "Rewrite the file in place");
  CLI::App * ast = file_command("ast", "Print the syntax tree as JSON");
  ast->add_option("--out", o.out, "Write to a file instead of standard output");
  CLI::App * compile_cmd = file_command("compile", "Print the timed Petri net as JSON");
  add_style(compile_cmd);
  compile_cmd->add_option("--out", o.out, "Write to a file instead of standard output");
  compile_cmd->add_flag("--json", o.json, "JSON output (the default)");
  CLI::App * simulate = file_command("simulate", "Print the composition timeline as JSON");
  add_style(simulate);
  simulate->add_option("--out", o.out, "Write to a file instead of standard output");
  simulate->add_flag("--json", o.json, "JSON output (the default)");
  CLI::App * render = file_command("render", "Write one SVG sketch per frame");
  add_style(render);
  render->add_option("--out", o.out, "Output directory")->required();
  CLI::App * stats = file_command("stats", "Print shot statistics as JSON");
  stats->add_option("--out", o.out, "Write to a file instead of standard output");
  stats->add_flag("--json", o.json, "JSON output (the default)");
  CLI::App * fuzz = app.add_subcommand("fuzz", "Round-trip random sentences through the parser and formatter");
  fuzz->add_option("--count", o.count, "Number of sentences");
  fuzz->add_option("--seed", o.seed, "Random seed");
  fuzz->add_option("--depth", o.depth, "Maximum derivation depth");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError & e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }

  try {
    if (check->parsed()) return cmd_check(o, out, err);
    if (fmt->parsed()) return cmd_fmt(o, out, err);
    if (ast->parsed()) return cmd_ast(o, out, err);
    if (compile_cmd->parsed()) return cmd_compile(o, out, err);
    if (simulate->parsed()) return cmd_simulate(o, out, err);
    if (render->parsed()) return cmd_render(o, out, err);
    if (stats->parsed()) return cmd_stats(o, out, err);
    if (fuzz->parsed()) return cmd_fuzz(o, out, err);
  } catch (const Exit & e) {
    return e.code;
  }
  return usage_error;
}

}  // namespace psl::cli
