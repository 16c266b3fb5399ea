#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace psl
{

/// Half-open byte range into a source text.
struct Span
{
  std::size_t begin = 0;
  std::size_t end = 0;

  [[nodiscard]] std::size_t size() const noexcept { return end - begin; }
  friend bool operator==(const Span &, const Span &) = default;
};

enum class Severity { error, warning };

/// A located message with a stable code (E0xx syntax, E1xx continuity, W2xx style
/// warnings, W3xx compile warnings).
struct Diagnostic
{
  Severity severity = Severity::error;
  std::string code;
  Span span;
  std::string message;

  friend bool operator==(const Diagnostic &, const Diagnostic &) = default;
};

using Diagnostics = std::vector<Diagnostic>;

[[nodiscard]] inline bool has_errors(const Diagnostics & diags)
{
  for (const auto & d : diags) {
    if (d.severity == Severity::error) return true;
  }
  return false;
}

[[nodiscard]] inline const char * to_string(Severity s)
{
  return s == Severity::error ? "error" : "warning";
}

namespace codes
{
inline constexpr const char * empty_storyboard = "E001";
inline constexpr const char * unexpected_character = "E002";
inline constexpr const char * syntax = "E003";
inline constexpr const char * reserved_name = "E004";
inline constexpr const char * bad_fraction = "E005";
inline constexpr const char * missing_join = "E006";

inline constexpr const char * not_on_screen = "E101";
inline constexpr const char * screen_order = "E102";
inline constexpr const char * already_on_screen = "E103";
inline constexpr const char * exit_absent = "E104";
inline constexpr const char * cross_pair = "E105";
inline constexpr const char * duplicate_subject = "E106";
inline constexpr const char * cross_not_adjacent = "E107";
inline constexpr const char * target_lacks_actor = "E108";
inline constexpr const char * empty_frame = "E109";

inline constexpr const char * dropped_subjects = "W201";
inline constexpr const char * idle_lock = "W202";

inline constexpr const char * duration_fallback = "W301";
}  // namespace codes

}  // namespace psl
