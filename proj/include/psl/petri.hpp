#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "psl/ast.hpp"
#include "psl/rational.hpp"

namespace psl::petri
{

class PetriError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

enum class PlaceKind { subject, camera, control };
enum class CameraState { still, moving };

struct Place
{
  std::string id;
  PlaceKind kind = PlaceKind::control;
  friend bool operator==(const Place &, const Place &) = default;
};

/// Screen attributes of an on-screen subject.
struct SubjectToken
{
  Size size = Size::MS;
  Profile profile = Profile::front;
  Rational screen;
  int plane = 0;
  friend bool operator==(const SubjectToken &, const SubjectToken &) = default;
};

struct CameraToken
{
  CameraState state = CameraState::still;
  friend bool operator==(const CameraToken &, const CameraToken &) = default;
};

struct ControlToken
{
  friend bool operator==(const ControlToken &, const ControlToken &) = default;
};

using Token = std::variant<ControlToken, CameraToken, SubjectToken>;

/// Place id -> tokens. Unmarked places may be absent or hold an empty list.
using Marking = std::map<std::string, std::vector<Token>>;

/// Partial subject token: set fields overwrite the consumed token's fields. A
/// subject place that is an output but not an input needs every field set.
struct SubjectPatch
{
  std::optional<Size> size;
  std::optional<Profile> profile;
  std::optional<Rational> screen;
  std::optional<int> plane;
  friend bool operator==(const SubjectPatch &, const SubjectPatch &) = default;
};

struct Rewrite
{
  std::string place;
  std::variant<SubjectPatch, CameraToken> value;
  friend bool operator==(const Rewrite &, const Rewrite &) = default;
};

struct Transition
{
  std::string id;
  std::string label;
  Rational duration;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::vector<Rewrite> effect;
  /// Marks transitions whose effect changes the picture; others must leave every
  /// subject token untouched.
  bool changes_composition = false;
  /// What the camera does while the transition plays out.
  CameraState camera_during = CameraState::still;
  friend bool operator==(const Transition &, const Transition &) = default;
};

struct Net
{
  std::vector<Place> places;
  std::vector<Transition> transitions;
  Marking initial;

  [[nodiscard]] const Place * place(std::string_view id) const;
  friend bool operator==(const Net &, const Net &) = default;
};

/// Structural problems: duplicate or dangling place ids, negative durations,
/// subject rewrites on transitions that do not change the composition.
[[nodiscard]] std::vector<std::string> check_net(const Net & net);

/// Marking invariants for compiled storyboards: one control token overall, one
/// camera token, at most one token per subject place.
[[nodiscard]] std::vector<std::string> check_marking(const Net & net, const Marking & m);

[[nodiscard]] std::size_t token_count(const Marking & m, const std::string & place);

/// Transitions whose input places all hold enough tokens, in declaration order.
[[nodiscard]] std::vector<const Transition *> enabled(const Net & net, const Marking & m);

/// Consumes one token per input arc and produces one per output arc. A produced
/// token starts as the token consumed from the same place (or a fresh one) and
/// then receives the transition's rewrite. Throws PetriError if `t` is not enabled.
[[nodiscard]] Marking fire(const Net & net, const Marking & m, const Transition & t);

struct Interval
{
  Rational t0;
  Rational t1;
  Marking marking;
  /// Transition playing out during the interval; none for the terminal hold.
  std::optional<std::size_t> transition;
  /// The pending transition changes the composition and takes time, so the
  /// picture during the interval is only known at its ends.
  bool in_transition = false;
};

using Trajectory = std::vector<Interval>;

/// Fires the unique enabled transition until none remains. Interval i holds the
/// marking reached after i firings for the duration of the next transition; the
/// final marking is held for `terminal_hold`. Throws PetriError when more than one
/// transition is enabled or after `max_steps` firings.
[[nodiscard]] Trajectory simulate(const Net & net, Rational terminal_hold = Rational(1),
                                  std::size_t max_steps = 1'000'000);

[[nodiscard]] std::string_view to_string(PlaceKind k);
[[nodiscard]] std::string_view to_string(CameraState s);

[[nodiscard]] nlohmann::json to_json(const Token & t);
[[nodiscard]] nlohmann::json to_json(const Marking & m);
[[nodiscard]] nlohmann::json to_json(const Net & net);
[[nodiscard]] nlohmann::json to_json(const Trajectory & trajectory);

}  // namespace psl::petri
