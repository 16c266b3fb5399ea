#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "commands.hpp"
#include "support.hpp"

namespace fs = std::filesystem;

namespace
{

struct Run
{
  int code;
  std::string out;
  std::string err;
};

Run psl_run(std::vector<std::string> args)
{
  std::ostringstream out, err;
  const int code = psl::cli::run(args, out, err);
  return Run{code, out.str(), err.str()};
}

struct TempDir
{
  fs::path path;
  TempDir()
  {
    static int counter = 0;
    path = fs::temp_directory_path() / ("psl_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string & name, const std::string & text) const
  {
    std::ofstream(path / name, std::ios::binary) << text;
    return (path / name).string();
  }
};

}  // namespace

TEST_CASE("check")
{
  TempDir dir;
  const auto good = psl_run({"check", (fs::path(PSL_CORPUS_DIR) / "two_shot.psl").string()});
  CHECK(good.code == 0);
  CHECK(good.out.empty());
  CHECK(good.err.empty());

  const std::string bad = dir.write("bad.psl", "MS on A, A speaks.\nCut to MS A.\n");
  const auto r = psl_run({"check", bad});
  CHECK(r.code == 1);
  CHECK(r.err == bad + ":29: E003 expected 'on', found 'A'\n");

  const auto j = psl_run({"check", "--json", bad});
  CHECK(j.code == 1);
  const auto line = nlohmann::json::parse(j.out);
  CHECK(line.at("code") == "E003");
  CHECK(line.at("psl_schema") == 1);

  CHECK(psl_run({"check", (dir.path / "missing.psl").string()}).code == 2);
}

TEST_CASE("warnings do not fail check")
{
  TempDir dir;
  const auto r = psl_run({"check", dir.write("w.psl", "MS on A, lock.")});
  CHECK(r.code == 0);
  CHECK(r.err.find("W202") != std::string::npos);
}

TEST_CASE("fmt")
{
  TempDir dir;
  const std::string canonical = "# notes stay\n\nMS on A and B, A speaks.\nCut to CU on B.\n";
  const std::string path = dir.write("c.psl", canonical);
  const auto same = psl_run({"fmt", path});
  CHECK(same.code == 0);
  CHECK(same.out == canonical);

  const std::string messy = dir.write("m.psl", "ms ON A and B ,a SPEAKS . CUT to close-up on B.");
  CHECK(psl_run({"fmt", messy}).out == "MS on A and B, a speaks.\nCut to CU on B.\n");
  CHECK(psl_run({"fmt", "--write", messy}).code == 0);
  CHECK(psl::test::read_file(messy) == "MS on A and B, a speaks.\nCut to CU on B.\n");
  const auto before = fs::last_write_time(messy);
  CHECK(psl_run({"fmt", "--write", messy}).code == 0);
  CHECK(fs::last_write_time(messy) == before);

  const std::string broken_text = "MS on , A speaks.";
  const std::string broken = dir.write("b.psl", broken_text);
  CHECK(psl_run({"fmt", "--write", broken}).code == 1);
  CHECK(psl::test::read_file(broken) == broken_text);
}

TEST_CASE("compile, simulate and stats")
{
  TempDir dir;
  const std::string one = dir.write("one.psl", "MS on A.");
  const auto sim = psl_run({"simulate", one});
  CHECK(sim.code == 0);
  const auto timeline = nlohmann::json::parse(sim.out);
  CHECK(timeline.at("psl_schema") == 1);
  CHECK(timeline.at("entries").size() == 1);

  const std::string two = dir.write("two.psl", "MS on A and B, A speaks, A crosses B.");
  const auto net = nlohmann::json::parse(psl_run({"compile", two}).out);
  CHECK(net.at("psl_schema") == 1);
  CHECK(net.at("transitions").size() == 2);

  const std::string out_file = (dir.path / "net.json").string();
  CHECK(psl_run({"compile", two, "--out", out_file}).code == 0);
  CHECK(nlohmann::json::parse(psl::test::read_file(out_file)) == net);

  const auto stats = nlohmann::json::parse(psl_run({"stats", two}).out);
  CHECK(stats.at("categories").at("Simple") == 1);

  const std::string invalid = dir.write("invalid.psl", "MS on A, B speaks.");
  for (const char * cmd : {"compile", "simulate", "stats"}) {
    const auto r = psl_run({cmd, invalid});
    CHECK(r.code == 1);
    CHECK(r.err.find("E101") != std::string::npos);
  }
}

TEST_CASE("render")
{
  TempDir dir;
  const std::string src = dir.write("r.psl", "MS on A and B, A crosses B.\nCut to CU on A.");
  const std::string out = (dir.path / "frames").string();
  const auto r = psl_run({"render", src, "--out", out});
  CHECK(r.code == 0);
  CHECK(fs::exists(fs::path(out) / "shot01_frame01.svg"));
  CHECK(fs::exists(fs::path(out) / "shot01_frame02.svg"));
  CHECK(fs::exists(fs::path(out) / "shot02_frame01.svg"));

  const std::string style = dir.write("wide.style", "positions.2 = 1/5, 4/5\n");
  CHECK(psl_run({"render", src, "--out", out, "--style", style}).code == 0);
  CHECK(psl::test::read_file(fs::path(out) / "shot01_frame01.svg").find("data-x=\"1/5\"") != std::string::npos);

  const std::string bad_style = dir.write("bad.style", "positions.2 = 2/3, 1/3\n");
  CHECK(psl_run({"render", src, "--out", out, "--style", bad_style}).code == 2);

  const std::string blocker = dir.write("file", "x");
  CHECK(psl_run({"render", src, "--out", blocker + "/sub"}).code == 2);
  CHECK(psl_run({"render", src}).code == 2);
}

TEST_CASE("fuzz")
{
  const auto a = psl_run({"fuzz", "--count", "200", "--seed", "42"});
  CHECK(a.code == 0);
  CHECK(a.out.find("200/200") != std::string::npos);
  CHECK(psl_run({"fuzz", "--count", "200", "--seed", "42"}).out == a.out);
  CHECK(psl_run({"fuzz", "--count", "0"}).code == 2);
}

TEST_CASE("usage errors")
{
  CHECK(psl_run({}).code == 2);
  CHECK(psl_run({"bogus"}).code == 2);
  CHECK(psl_run({"check"}).code == 2);
  CHECK(psl_run({"--help"}).code == 0);
}
