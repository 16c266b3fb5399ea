#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "psl/diagnostic.hpp"
#include "psl/rational.hpp"

namespace psl
{

/// Source location attached to AST nodes. It never participates in structural
/// equality, so a reparsed tree compares equal to the original.
struct Loc
{
  Span span;
  friend bool operator==(const Loc &, const Loc &) noexcept { return true; }
};

/// Shot sizes, tightest first. The underlying value is the ordinal.
enum class Size { BCU, CU, MCU, MS, MLS, LS, VLS };
inline constexpr std::array<Size, 7> all_sizes = {
  Size::BCU, Size::CU, Size::MCU, Size::MS, Size::MLS, Size::LS, Size::VLS};

/// Facing relative to the camera, in 45 degree steps. `front` faces the camera; `left`
/// shows the subject's left side to the camera.
enum class Profile {
  front,
  three_quarter_left,
  left,
  three_quarter_back_left,
  back,
  three_quarter_back_right,
  right,
  three_quarter_front_right,
};
inline constexpr std::array<Profile, 8> all_profiles = {
  Profile::front, Profile::three_quarter_left, Profile::left,
  Profile::three_quarter_back_left, Profile::back, Profile::three_quarter_back_right,
  Profile::right, Profile::three_quarter_front_right};

enum class Anchor { far_left, left, center, right, far_right };
inline constexpr std::array<Anchor, 5> all_anchors = {
  Anchor::far_left, Anchor::left, Anchor::center, Anchor::right, Anchor::far_right};

/// Horizontal placement: a named anchor or an explicit fraction strictly inside (0,1).
struct ScreenPosition
{
  std::variant<Anchor, Rational> value;

  [[nodiscard]] Rational fraction() const;
  friend bool operator==(const ScreenPosition &, const ScreenPosition &) = default;
};

struct SubjectSpec
{
  std::string name;
  std::optional<Profile> profile;
  std::optional<ScreenPosition> screen;
  Loc loc;

  friend bool operator==(const SubjectSpec &, const SubjectSpec &) = default;
};

/// Subjects listed left to right.
struct FlatComposition
{
  Size size = Size::MS;
  std::vector<SubjectSpec> subjects;
  Loc loc;

  friend bool operator==(const FlatComposition &, const FlatComposition &) = default;
};

/// Planes listed foreground first; a single plane is flat staging.
struct Composition
{
  std::vector<FlatComposition> planes;
  Loc loc;

  [[nodiscard]] std::size_t subject_count() const;
  [[nodiscard]] const SubjectSpec * find(std::string_view name) const;
  [[nodiscard]] std::vector<std::string> names() const;

  friend bool operator==(const Composition &, const Composition &) = default;
};

enum class CameraMove { pan, dolly, crane };
enum class Side { left, right };

struct Lock
{
  friend bool operator==(const Lock &, const Lock &) = default;
};

/// pan/dolly/crane with: the camera moves so the composition is maintained.
struct CameraWith
{
  CameraMove move = CameraMove::pan;
  SubjectSpec subject;
  friend bool operator==(const CameraWith &, const CameraWith &) = default;
};

/// pan/dolly/crane to: the camera moves to reach a new composition.
struct CameraTo
{
  CameraMove move = CameraMove::pan;
  Composition target;
  friend bool operator==(const CameraTo &, const CameraTo &) = default;
};

/// Combined actor and camera change toward a new composition.
struct ContinueTo
{
  Composition target;
  friend bool operator==(const ContinueTo &, const ContinueTo &) = default;
};

struct Enter
{
  Side from = Side::left;
  Composition target;
  friend bool operator==(const Enter &, const Enter &) = default;
};
struct Exit
{
  Side to = Side::left;
  friend bool operator==(const Exit &, const Exit &) = default;
};
struct Cross
{
  std::string other;
  friend bool operator==(const Cross &, const Cross &) = default;
};
struct Move
{
  Composition target;
  friend bool operator==(const Move &, const Move &) = default;
};
struct Speak
{
  friend bool operator==(const Speak &, const Speak &) = default;
};
struct React
{
  std::optional<std::string> to;
  friend bool operator==(const React &, const React &) = default;
};
struct Use
{
  std::string object;
  friend bool operator==(const Use &, const Use &) = default;
};
struct Touch
{
  std::string object;
  friend bool operator==(const Touch &, const Touch &) = default;
};

using ActorVerb = std::variant<Enter, Exit, Cross, Move, Speak, React, Use, Touch>;

struct ActorAction
{
  std::string actor;
  ActorVerb verb;
  friend bool operator==(const ActorAction &, const ActorAction &) = default;
};

struct ScreenEvent
{
  std::variant<Lock, CameraWith, CameraTo, ContinueTo, ActorAction> action;
  Loc loc;

  friend bool operator==(const ScreenEvent &, const ScreenEvent &) = default;
};

/// Flat enumeration of every event form, used for tables and histograms.
enum class EventKind {
  lock,
  pan_with,
  dolly_with,
  crane_with,
  pan_to,
  dolly_to,
  crane_to,
  continue_to,
  enter,
  exit,
  cross,
  move,
  speak,
  react,
  use,
  touch,
};
inline constexpr std::size_t event_kind_count = 16;

[[nodiscard]] EventKind kind_of(const ScreenEvent & e);
[[nodiscard]] std::string_view to_string(EventKind k);
[[nodiscard]] std::array<EventKind, event_kind_count> all_event_kinds();
/// Camera events are everything except actor actions.
[[nodiscard]] bool is_camera_event(EventKind k);
/// The composition carried by a to-form, continue-to, enter or move event.
[[nodiscard]] const Composition * explicit_target(const ScreenEvent & e);

struct Shot
{
  Composition initial;
  std::vector<ScreenEvent> events;
  Loc loc;

  friend bool operator==(const Shot &, const Shot &) = default;
};

enum class ShotJoin { cut, dissolve };

struct Storyboard
{
  std::vector<Shot> shots;
  std::vector<ShotJoin> joins;

  friend bool operator==(const Storyboard &, const Storyboard &) = default;
};

// Canonical spellings. `from_string` helpers accept the canonical spelling only.
[[nodiscard]] std::string_view to_string(Size s);
[[nodiscard]] std::string_view to_string(Profile p);
[[nodiscard]] std::string_view to_string(Anchor a);
[[nodiscard]] std::string_view to_string(CameraMove m);
[[nodiscard]] std::string_view to_string(Side s);
[[nodiscard]] std::string_view to_string(ShotJoin j);
[[nodiscard]] std::optional<Size> size_from_string(std::string_view s);
[[nodiscard]] std::optional<Profile> profile_from_string(std::string_view s);
[[nodiscard]] std::optional<Anchor> anchor_from_string(std::string_view s);

[[nodiscard]] Rational anchor_fraction(Anchor a);
/// Facing angle in degrees, counter-clockwise seen from above, 0 = facing camera.
[[nodiscard]] int profile_angle(Profile p);

/// True for identifiers that the lexer will hand back as a NAME token.
[[nodiscard]] bool is_valid_name(std::string_view name);

}  // namespace psl
