#include "psl/ast.hpp"

#include <type_traits>

namespace psl
{

Rational ScreenPosition::fraction() const
{
  if (const auto * a = std::get_if<Anchor>(&value)) {
    return anchor_fraction(*a);
  }
  return std::get<Rational>(value);
}

std::size_t Composition::subject_count() const
{
  std::size_t n = 0;
  for (const auto & p : planes) n += p.subjects.size();
  return n;
}

const SubjectSpec * Composition::find(std::string_view name) const
{
  for (const auto & p : planes) {
    for (const auto & s : p.subjects) {
      if (s.name == name) return &s;
    }
  }
  return nullptr;
}

std::vector<std::string> Composition::names() const
{
  std::vector<std::string> out;
  for (const auto & p : planes) {
    for (const auto & s : p.subjects) out.push_back(s.name);
  }
  return out;
}

EventKind kind_of(const ScreenEvent & e)
{
  return std::visit(
    [](const auto & a) -> EventKind {
      using T = std::decay_t<decltype(a)>;
      if constexpr (std::is_same_v<T, Lock>) {
        return EventKind::lock;
      } else if constexpr (std::is_same_v<T, CameraWith>) {
        switch (a.move) {
          case CameraMove::pan: return EventKind::pan_with;
          case CameraMove::dolly: return EventKind::dolly_with;
          case CameraMove::crane: return EventKind::crane_with;
        }
        return EventKind::pan_with;
      } else if constexpr (std::is_same_v<T, CameraTo>) {
        switch (a.move) {
          case CameraMove::pan: return EventKind::pan_to;
          case CameraMove::dolly: return EventKind::dolly_to;
          case CameraMove::crane: return EventKind::crane_to;
        }
        return EventKind::pan_to;
      } else if constexpr (std::is_same_v<T, ContinueTo>) {
        return EventKind::continue_to;
      } else {
        return std::visit(
          [](const auto & v) -> EventKind {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, Enter>) return EventKind::enter;
            else if constexpr (std::is_same_v<V, Exit>) return EventKind::exit;
            else if constexpr (std::is_same_v<V, Cross>) return EventKind::cross;
            else if constexpr (std::is_same_v<V, Move>) return EventKind::move;
            else if constexpr (std::is_same_v<V, Speak>) return EventKind::speak;
            else if constexpr (std::is_same_v<V, React>) return EventKind::react;
            else if constexpr (std::is_same_v<V, Use>) return EventKind::use;
            else return EventKind::touch;
          },
          a.verb);
      }
    },
    e.action);
}

std::string_view to_string(EventKind k)
{
  switch (k) {
    case EventKind::lock: return "lock";
    case EventKind::pan_with: return "pan_with";
    case EventKind::dolly_with: return "dolly_with";
    case EventKind::crane_with: return "crane_with";
    case EventKind::pan_to: return "pan_to";
    case EventKind::dolly_to: return "dolly_to";
    case EventKind::crane_to: return "crane_to";
    case EventKind::continue_to: return "continue_to";
    case EventKind::enter: return "enter";
    case EventKind::exit: return "exit";
    case EventKind::cross: return "cross";
    case EventKind::move: return "move";
    case EventKind::speak: return "speak";
    case EventKind::react: return "react";
    case EventKind::use: return "use";
    case EventKind::touch: return "touch";
  }
  return "?";
}

std::array<EventKind, event_kind_count> all_event_kinds()
{
  std::array<EventKind, event_kind_count> out{};
  for (std::size_t i = 0; i < event_kind_count; ++i) out[i] = static_cast<EventKind>(i);
  return out;
}

bool is_camera_event(EventKind k) { return k <= EventKind::continue_to; }

const Composition * explicit_target(const ScreenEvent & e)
{
  if (const auto * to = std::get_if<CameraTo>(&e.action)) return &to->target;
  if (const auto * c = std::get_if<ContinueTo>(&e.action)) return &c->target;
  if (const auto * a = std::get_if<ActorAction>(&e.action)) {
    if (const auto * en = std::get_if<Enter>(&a->verb)) return &en->target;
    if (const auto * mv = std::get_if<Move>(&a->verb)) return &mv->target;
  }
  return nullptr;
}

std::string_view to_string(Size s)
{
  switch (s) {
    case Size::BCU: return "BCU";
    case Size::CU: return "CU";
    case Size::MCU: return "MCU";
    case Size::MS: return "MS";
    case Size::MLS: return "MLS";
    case Size::LS: return "LS";
    case Size::VLS: return "VLS";
  }
  return "?";
}

std::string_view to_string(Profile p)
{
  switch (p) {
    case Profile::front: return "front";
    case Profile::three_quarter_left: return "3/4 left";
    case Profile::left: return "left";
    case Profile::three_quarter_back_left: return "3/4 back left";
    case Profile::back: return "back";
    case Profile::three_quarter_back_right: return "3/4 back right";
    case Profile::right: return "right";
    case Profile::three_quarter_front_right: return "3/4 right";
  }
  return "?";
}

std::string_view to_string(Anchor a)
{
  switch (a) {
    case Anchor::far_left: return "far left";
    case Anchor::left: return "left";
    case Anchor::center: return "center";
    case Anchor::right: return "right";
    case Anchor::far_right: return "far right";
  }
  return "?";
}

std::string_view to_string(CameraMove m)
{
  switch (m) {
    case CameraMove::pan: return "pan";
    case CameraMove::dolly: return "dolly";
    case CameraMove::crane: return "crane";
  }
  return "?";
}

std::string_view to_string(Side s) { return s == Side::left ? "left" : "right"; }

std::string_view to_string(ShotJoin j) { return j == ShotJoin::cut ? "cut" : "dissolve"; }

std::optional<Size> size_from_string(std::string_view s)
{
  for (auto v : all_sizes) {
    if (to_string(v) == s) return v;
  }
  return std::nullopt;
}

std::optional<Profile> profile_from_string(std::string_view s)
{
  for (auto v : all_profiles) {
    if (to_string(v) == s) return v;
  }
  return std::nullopt;
}

std::optional<Anchor> anchor_from_string(std::string_view s)
{
  for (auto v : all_anchors) {
    if (to_string(v) == s) return v;
  }
  return std::nullopt;
}

Rational anchor_fraction(Anchor a)
{
  switch (a) {
    case Anchor::far_left: return {1, 6};
    case Anchor::left: return {1, 3};
    case Anchor::center: return {1, 2};
    case Anchor::right: return {2, 3};
    case Anchor::far_right: return {5, 6};
  }
  return {1, 2};
}

int profile_angle(Profile p) { return static_cast<int>(p) * 45; }

}  // namespace psl
