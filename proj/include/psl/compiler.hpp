#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "psl/analysis.hpp"
#include "psl/ast.hpp"
#include "psl/petri.hpp"
#include "psl/stylesheet.hpp"

namespace psl
{

/// Raised when the storyboard fails validation; carries the diagnostics.
class CompileError : public std::runtime_error
{
public:
  explicit CompileError(Diagnostics diagnostics);
  [[nodiscard]] const Diagnostics & diagnostics() const noexcept { return diagnostics_; }

private:
  Diagnostics diagnostics_;
};

/// Why a transition exists in the compiled chain.
struct TransitionRole
{
  enum class Kind { event, hold, join } kind = Kind::event;
  std::size_t shot = 0;
  std::size_t event = 0;  // index into the shot's events when kind == event
};

struct CompiledStoryboard
{
  petri::Net net;
  std::vector<TransitionRole> roles;  // parallel to net.transitions
  std::vector<std::vector<StateSegment>> segments;  // per shot
  Diagnostics warnings;  // W301 duration fallbacks
};

inline constexpr std::string_view camera_place = "camera";
[[nodiscard]] std::string subject_place(std::string_view name);
[[nodiscard]] std::string control_place(std::size_t k);

/// Compiles a validated storyboard into a single control chain: one transition per
/// screen event, and between shots a hold transition (the closing frame of the
/// earlier shot) followed by the cut or dissolve that swaps every subject token.
/// Throws CompileError when validation reports errors.
[[nodiscard]] CompiledStoryboard compile(const Storyboard & sb, const Stylesheet & s);
[[nodiscard]] petri::Net compile_storyboard(const Storyboard & sb, const Stylesheet & s);
[[nodiscard]] petri::Net compile_shot(const Shot & shot, const Stylesheet & s);

/// Subject tokens for a fully specified composition (anchors become fractions).
[[nodiscard]] petri::Marking marking_of(const Composition & c);
/// Inverse of marking_of: planes by plane index, subjects by screen fraction.
[[nodiscard]] Composition composition_of(const petri::Marking & m);

struct TimelineEntry
{
  Rational t0;
  Rational t1;
  Composition composition;
  StateId state = StateId::static_camera_fixed_composition;
  /// Set on the cut/dissolve between two shots; shot entries are stable pictures.
  bool in_transition = false;
  std::size_t shot_index = 0;
  /// Canonical text of the event, hold or join that plays out during the entry.
  std::string label;
};

struct Timeline
{
  std::vector<TimelineEntry> entries;
  Diagnostics warnings;
};

/// Simulates the compiled net and maps each interval back to a composition.
/// Zero-length intervals inside a shot (lock markers) are dropped; join entries
/// are kept even when instantaneous.
[[nodiscard]] Timeline timeline(const Storyboard & sb, const Stylesheet & s);

[[nodiscard]] nlohmann::json to_json(const Timeline & t);

}  // namespace psl
