#include "psl/stylesheet.hpp"

#include <charconv>
#include <sstream>

namespace psl
{

Stylesheet Stylesheet::defaults()
{
  Stylesheet s;
  s.positions_by_cardinality[1] = {Rational(1, 2)};
  s.positions_by_cardinality[2] = {Rational(1, 3), Rational(2, 3)};
  s.positions_by_cardinality[3] = {Rational(1, 4), Rational(1, 2), Rational(3, 4)};
  s.duration_by_verb = {
    {"speak", Rational(2)}, {"react", Rational(1)}, {"use", Rational(1)}, {"touch", Rational(1)},
    {"move", Rational(2)}, {"cross", Rational(2)}, {"enter", Rational(2)}, {"exit", Rational(1)},
    {"pan", Rational(2)}, {"dolly", Rational(3)}, {"crane", Rational(3)}, {"continue", Rational(3)},
    {"lock", Rational(0)}, {"cut", Rational(0)}, {"dissolve", Rational(1)}, {"hold", Rational(1)},
  };
  s.figure_height_by_size = {
    {Size::BCU, 1.8}, {Size::CU, 1.4}, {Size::MCU, 1.0}, {Size::MS, 0.75},
    {Size::MLS, 0.55}, {Size::LS, 0.35}, {Size::VLS, 0.18},
  };
  return s;
}

std::vector<Rational> Stylesheet::positions(std::size_t n) const
{
  if (auto it = positions_by_cardinality.find(n); it != positions_by_cardinality.end()) {
    return it->second;
  }
  std::vector<Rational> out;
  for (std::size_t k = 1; k <= n; ++k) {
    out.emplace_back(static_cast<std::int64_t>(k), static_cast<std::int64_t>(n + 1));
  }
  return out;
}

std::optional<Rational> Stylesheet::duration(std::string_view key) const
{
  if (auto it = duration_by_verb.find(key); it != duration_by_verb.end()) return it->second;
  return std::nullopt;
}

double Stylesheet::figure_height(Size s) const
{
  if (auto it = figure_height_by_size.find(s); it != figure_height_by_size.end()) return it->second;
  return Stylesheet::defaults().figure_height_by_size.at(s);
}

std::string_view duration_key(EventKind k)
{
  switch (k) {
    case EventKind::lock: return "lock";
    case EventKind::pan_with:
    case EventKind::pan_to: return "pan";
    case EventKind::dolly_with:
    case EventKind::dolly_to: return "dolly";
    case EventKind::crane_with:
    case EventKind::crane_to: return "crane";
    case EventKind::continue_to: return "continue";
    default: return to_string(k);
  }
}

std::string_view duration_key(ShotJoin j) { return to_string(j); }

std::vector<std::string> check_stylesheet(const Stylesheet & s)
{
  std::vector<std::string> problems;
  for (const auto & [n, list] : s.positions_by_cardinality) {
    const std::string key = "positions." + std::to_string(n);
    if (n == 0) problems.push_back(key + ": cardinality must be at least 1");
    if (list.size() != n) problems.push_back(key + ": expected " + std::to_string(n) + " fractions");
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (list[i] <= Rational(0) || list[i] >= Rational(1)) {
        problems.push_back(key + ": " + list[i].str() + " is outside (0,1)");
      }
      if (i > 0 && !(list[i - 1] < list[i])) problems.push_back(key + ": fractions must increase");
    }
  }
  for (const auto & [verb, d] : s.duration_by_verb) {
    // lock and cut are instantaneous markers; everything else takes time.
    const bool marker = verb == "lock" || verb == "cut";
    if (d < Rational(0) || (!marker && d == Rational(0))) {
      problems.push_back("duration." + verb + ": must be " + (marker ? "non-negative" : "positive"));
    }
  }
  std::optional<double> previous;
  for (auto size : all_sizes) {
    const double h = s.figure_height(size);
    const std::string key = "height." + std::string(to_string(size));
    if (!(h > 0.0 && h <= 2.0)) problems.push_back(key + ": must lie in (0,2]");
    if (previous && !(h < *previous)) problems.push_back(key + ": heights must shrink as sizes widen");
    previous = h;
  }
  return problems;
}

namespace
{

std::string_view trim(std::string_view s)
{
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail_at(std::size_t line, const std::string & msg)
{
  throw StylesheetError("stylesheet line " + std::to_string(line) + ": " + msg);
}

Rational rational_value(std::string_view text, std::size_t line)
{
  std::optional<Rational> r;
  try {
    r = Rational::parse(trim(text));
  } catch (const std::exception &) {
  }
  if (!r) fail_at(line, "'" + std::string(trim(text)) + "' is not a number or fraction");
  return *r;
}

}  // namespace

Stylesheet parse_stylesheet(std::string_view text, Stylesheet base)
{
  Stylesheet s = std::move(base);
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty() || line.front() == '#') continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) fail_at(line_no, "expected 'key = value'");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    const auto dot = key.find('.');
    if (dot == std::string_view::npos) fail_at(line_no, "unknown key '" + std::string(key) + "'");
    const std::string_view group = key.substr(0, dot);
    const std::string_view item = key.substr(dot + 1);

    if (key == "profile.default") {
      auto p = profile_from_string(value);
      if (!p) fail_at(line_no, "unknown profile '" + std::string(value) + "'");
      s.default_profile = *p;
    } else if (key == "size.default") {
      auto sz = size_from_string(value);
      if (!sz) fail_at(line_no, "unknown size '" + std::string(value) + "'");
      s.default_size = *sz;
    } else if (group == "positions") {
      std::size_t n = 0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), n);
      if (ec != std::errc{} || ptr != item.data() + item.size()) {
        fail_at(line_no, "positions key needs a subject count");
      }
      std::vector<Rational> list;
      std::string_view rest = value;
      while (true) {
        const auto comma = rest.find(',');
        list.push_back(rational_value(rest.substr(0, comma), line_no));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
      }
      s.positions_by_cardinality[n] = std::move(list);
    } else if (group == "duration") {
      if (item.empty()) fail_at(line_no, "duration key needs a verb");
      s.duration_by_verb[std::string(item)] = rational_value(value, line_no);
    } else if (group == "height") {
      auto sz = size_from_string(item);
      if (!sz) fail_at(line_no, "unknown size '" + std::string(item) + "'");
      double h = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), h);
      if (ec != std::errc{} || ptr != value.data() + value.size()) {
        fail_at(line_no, "'" + std::string(value) + "' is not a number");
      }
      s.figure_height_by_size[*sz] = h;
    } else {
      fail_at(line_no, "unknown key '" + std::string(key) + "'");
    }
  }
  if (auto problems = check_stylesheet(s); !problems.empty()) {
    throw StylesheetError("invalid stylesheet: " + problems.front());
  }
  return s;
}

std::string to_text(const Stylesheet & s)
{
  std::ostringstream out;
  out << "profile.default = " << to_string(s.default_profile) << '\n';
  out << "size.default = " << to_string(s.default_size) << '\n';
  for (const auto & [n, list] : s.positions_by_cardinality) {
    out << "positions." << n << " = ";
    for (std::size_t i = 0; i < list.size(); ++i) out << (i ? ", " : "") << list[i].str();
    out << '\n';
  }
  for (const auto & [verb, d] : s.duration_by_verb) out << "duration." << verb << " = " << d.str() << '\n';
  for (const auto & [size, h] : s.figure_height_by_size) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, h);
    out << "height." << to_string(size) << " = " << std::string_view(buf, res.ptr - buf) << '\n';
  }
  return out.str();
}

}  // namespace psl
