#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "psl/ast.hpp"
#include "psl/diagnostic.hpp"
#include "psl/stylesheet.hpp"

namespace psl
{

enum class ShotCategory { simple, complex, composite };
enum class EventClass { with_composition, to_composition };

/// The four camera/composition states of an interval within a shot.
enum class StateId : int {
  static_camera_fixed_composition = 1,
  static_camera_changing_composition = 2,
  moving_camera_fixed_composition = 3,
  moving_camera_changing_composition = 4,
};

[[nodiscard]] constexpr int to_int(StateId s) { return static_cast<int>(s); }
[[nodiscard]] std::string_view to_string(ShotCategory c);

/// Simple: camera never moves. Complex: pans (or continues) from a fixed point.
/// Composite: any dolly or crane.
[[nodiscard]] ShotCategory classify_shot(const Shot & shot);

[[nodiscard]] EventClass event_class(EventKind k);
[[nodiscard]] EventClass event_class(const ScreenEvent & e);

/// Thrown by infer_target when an event cannot apply to the composition.
class ContinuityError : public std::runtime_error
{
public:
  ContinuityError(const char * code, const std::string & what) : std::runtime_error(what), code_(code) {}
  [[nodiscard]] const char * code() const noexcept { return code_; }

private:
  const char * code_;
};

/// Composition after `e` fires on `current`. Explicit-target events return their
/// target; cross swaps the two subjects while screen positions stay with their
/// slots; exit removes the subject and any plane it empties. Events that maintain
/// the composition return `current` unchanged.
[[nodiscard]] Composition infer_target(const Composition & current, const ScreenEvent & e);

/// One interval of a shot. Interval k < n lasts while events[k] plays out; the
/// last interval (k == n) is the closing hold and has no event.
struct StateSegment
{
  std::size_t index = 0;
  std::optional<std::size_t> event;
  bool camera_moving = false;
  bool composition_changing = false;
  StateId state = StateId::static_camera_fixed_composition;

  friend bool operator==(const StateSegment &, const StateSegment &) = default;
};

/// Covers the shot with events.size() + 1 consecutive intervals. Lock pins the
/// camera until the next camera event; a with-form keeps it moving until then.
[[nodiscard]] std::vector<StateSegment> segment_states(const Shot & shot);

/// Continuity and ordering checks. Analysis of a shot stops at its first error,
/// since the on-screen state is unreliable afterwards.
[[nodiscard]] Diagnostics validate(const Storyboard & sb);

/// Fills missing profiles and screen positions. Explicit values are kept; a
/// default slot that would break left-to-right order with an explicit neighbour
/// is replaced by even spacing inside the gap.
[[nodiscard]] Composition apply_stylesheet(const Composition & c, const Stylesheet & s);

/// Replaces named anchors by their fractions.
[[nodiscard]] Composition resolve_positions(const Composition & c);

/// True when every subject has a profile and a screen position.
[[nodiscard]] bool fully_specified(const Composition & c);

}  // namespace psl
