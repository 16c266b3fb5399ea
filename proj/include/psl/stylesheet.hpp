#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "psl/ast.hpp"
#include "psl/rational.hpp"

namespace psl
{

class StylesheetError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Defaults that complete under-specified compositions and time the screen events.
struct Stylesheet
{
  Profile default_profile = Profile::front;
  /// n -> n strictly increasing fractions in (0,1).
  std::map<std::size_t, std::vector<Rational>> positions_by_cardinality;
  Size default_size = Size::MS;
  /// Keyed by duration verb (see `duration_key`), in abstract time units.
  std::map<std::string, Rational, std::less<>> duration_by_verb;
  /// Apparent figure height as a fraction of frame height; > 1 is cropped.
  std::map<Size, double> figure_height_by_size;

  /// The house style: front-facing subjects at 1/2, thirds, quarters, ...
  [[nodiscard]] static Stylesheet defaults();

  /// Screen slots for n subjects: the table entry, or k/(n+1) when absent.
  [[nodiscard]] std::vector<Rational> positions(std::size_t n) const;
  [[nodiscard]] std::optional<Rational> duration(std::string_view key) const;
  [[nodiscard]] double figure_height(Size s) const;

  friend bool operator==(const Stylesheet &, const Stylesheet &) = default;
};

/// Duration table key for an event: "pan", "dolly", "crane", "continue", "lock",
/// "speak", "react", "use", "touch", "move", "cross", "enter", "exit".
[[nodiscard]] std::string_view duration_key(EventKind k);
[[nodiscard]] std::string_view duration_key(ShotJoin j);
/// Key holding the final composition of a shot on screen.
inline constexpr std::string_view hold_key = "hold";

/// Returns a description of every broken invariant; empty when the sheet is usable.
[[nodiscard]] std::vector<std::string> check_stylesheet(const Stylesheet & s);

/// Parses `key = value` lines over `base` (individual keys override). Throws
/// StylesheetError naming the line on malformed input or when the merged sheet
/// fails check_stylesheet.
[[nodiscard]] Stylesheet parse_stylesheet(std::string_view text, Stylesheet base = Stylesheet::defaults());

/// Writes every key in canonical order; parse_stylesheet(to_text(s)) == s.
[[nodiscard]] std::string to_text(const Stylesheet & s);

}  // namespace psl
