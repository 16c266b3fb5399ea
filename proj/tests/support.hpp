#pragma once

// Helpers shared by the unit and acceptance suites, including reference
// implementations that never touch the Petri net engine.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "psl/analysis.hpp"
#include "psl/parser.hpp"
#include "psl/stylesheet.hpp"

namespace psl::test
{

inline std::string read_file(const std::filesystem::path & p)
{
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  return std::string(std::istreambuf_iterator<char>(in), {});
}

inline std::vector<std::filesystem::path> psl_files(const std::filesystem::path & dir)
{
  std::vector<std::filesystem::path> out;
  for (const auto & e : std::filesystem::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".psl") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::filesystem::path> corpus_files() { return psl_files(PSL_CORPUS_DIR); }
inline std::vector<std::filesystem::path> error_corpus_files()
{
  return psl_files(std::filesystem::path(PSL_CORPUS_DIR) / "errors");
}

inline Storyboard parse_ok(std::string_view text)
{
  auto r = parse_storyboard(text);
  if (!r.value) {
    throw std::runtime_error("parse failed: " + r.diagnostics.front().code + " " + r.diagnostics.front().message);
  }
  return std::move(*r.value);
}

inline Composition composition_ok(std::string_view text)
{
  auto r = parse_composition(text);
  if (!r.value) throw std::runtime_error("composition failed to parse: " + std::string(text));
  return std::move(*r.value);
}

inline Composition completed(const Composition & c, const Stylesheet & s)
{
  return resolve_positions(apply_stylesheet(c, s));
}

/// Reference picture sequence: fold the events over the completed initial
/// composition. One picture per timed event (its starting picture), then the
/// final picture. Events with zero duration are markers and add nothing.
inline std::vector<Composition> folded_pictures(const Shot & shot, const Stylesheet & s)
{
  std::vector<Composition> out;
  Composition c = completed(shot.initial, s);
  for (const auto & e : shot.events) {
    const auto d = s.duration(duration_key(kind_of(e))).value_or(Rational(1));
    if (d != Rational(0)) out.push_back(c);
    if (event_class(e) == EventClass::to_composition) c = completed(infer_target(c, e), s);
  }
  out.push_back(c);
  return out;
}

/// Cross without the analysis module: exchange the two names in their plane.
inline Composition swap_names(Composition c, const std::string & a, const std::string & b)
{
  for (auto & plane : c.planes) {
    for (auto & s : plane.subjects) {
      if (s.name == a) {
        s.name = b;
      } else if (s.name == b) {
        s.name = a;
      }
    }
  }
  // profiles travel with the people, screen slots stay put
  for (auto & plane : c.planes) {
    auto ia = std::find_if(plane.subjects.begin(), plane.subjects.end(), [&](auto & s) { return s.name == a; });
    auto ib = std::find_if(plane.subjects.begin(), plane.subjects.end(), [&](auto & s) { return s.name == b; });
    if (ia != plane.subjects.end() && ib != plane.subjects.end()) std::swap(ia->profile, ib->profile);
  }
  return c;
}

/// A random multi-subject composition with unique names; screens are either all
/// explicit and increasing or left to the stylesheet, per plane.
inline Composition random_composition(std::mt19937 & rng)
{
  static const char * const pool[] = {"Anna", "Ben", "Carl", "Dora", "Emil", "Fay", "Gus", "Hal", "Ida", "Jon", "Kim", "Lea"};
  std::vector<std::string> names(std::begin(pool), std::end(pool));
  std::shuffle(names.begin(), names.end(), rng);
  std::size_t next = 0;
  Composition c;
  const int planes = 1 + static_cast<int>(rng() % 3);
  for (int p = 0; p < planes; ++p) {
    FlatComposition flat;
    flat.size = all_sizes[rng() % all_sizes.size()];
    const int n = (p == 0 ? 2 : 1) + static_cast<int>(rng() % 3);
    const bool explicit_screens = rng() % 2 == 0;
    for (int i = 0; i < n; ++i) {
      SubjectSpec s;
      s.name = names[next++];
      if (rng() % 2) s.profile = all_profiles[rng() % all_profiles.size()];
      if (explicit_screens) s.screen = ScreenPosition{Rational(i + 1, n + 1)};
      flat.subjects.push_back(std::move(s));
    }
    c.planes.push_back(std::move(flat));
  }
  return c;
}

}  // namespace psl::test
