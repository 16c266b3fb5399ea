#include "psl/format.hpp"

#include <type_traits>

namespace psl
{

std::string format(const SubjectSpec & s)
{
  std::string out = s.name;
  if (s.profile) {
    out += ' ';
    out += to_string(*s.profile);
  }
  if (s.screen) {
    if (const auto * a = std::get_if<Anchor>(&s.screen->value)) {
      out += " screen ";
      out += to_string(*a);
    } else {
      out += " at ";
      out += std::get<Rational>(s.screen->value).str();
    }
  }
  return out;
}

std::string format(const Composition & c)
{
  std::string out;
  for (std::size_t p = 0; p < c.planes.size(); ++p) {
    if (p > 0) out += ", ";
    const auto & flat = c.planes[p];
    out += to_string(flat.size);
    out += " on ";
    for (std::size_t i = 0; i < flat.subjects.size(); ++i) {
      if (i > 0) out += " and ";
      out += format(flat.subjects[i]);
    }
  }
  return out;
}

namespace
{

std::string format_verb(const ActorVerb & verb)
{
  return std::visit(
    [](const auto & v) -> std::string {
      using V = std::decay_t<decltype(v)>;
      if constexpr (std::is_same_v<V, Enter>) {
        return "enters from " + std::string(to_string(v.from)) + " to " + format(v.target);
      } else if constexpr (std::is_same_v<V, Exit>) {
        return "exits " + std::string(to_string(v.to));
      } else if constexpr (std::is_same_v<V, Cross>) {
        return "crosses " + v.other;
      } else if constexpr (std::is_same_v<V, Move>) {
        return "moves to " + format(v.target);
      } else if constexpr (std::is_same_v<V, Speak>) {
        return "speaks";
      } else if constexpr (std::is_same_v<V, React>) {
        return v.to ? "reacts to " + *v.to : std::string("reacts");
      } else if constexpr (std::is_same_v<V, Use>) {
        return "uses " + v.object;
      } else {
        return "touches " + v.object;
      }
    },
    verb);
}

}  // namespace

std::string format(const ScreenEvent & e)
{
  return std::visit(
    [](const auto & a) -> std::string {
      using T = std::decay_t<decltype(a)>;
      if constexpr (std::is_same_v<T, Lock>) {
        return "lock";
      } else if constexpr (std::is_same_v<T, CameraWith>) {
        return std::string(to_string(a.move)) + " with " + format(a.subject);
      } else if constexpr (std::is_same_v<T, CameraTo>) {
        return std::string(to_string(a.move)) + " to " + format(a.target);
      } else if constexpr (std::is_same_v<T, ContinueTo>) {
        return "continue to " + format(a.target);
      } else {
        return a.actor + " " + format_verb(a.verb);
      }
    },
    e.action);
}

std::string format(const Shot & shot)
{
  std::string out = format(shot.initial);
  for (const auto & e : shot.events) {
    out += ", ";
    out += format(e);
  }
  out += '.';
  return out;
}

std::string format(const Storyboard & sb)
{
  std::string out;
  for (std::size_t i = 0; i < sb.shots.size(); ++i) {
    if (i > 0) {
      out += '\n';
      out += sb.joins[i - 1] == ShotJoin::cut ? "Cut to " : "Dissolve to ";
    }
    out += format(sb.shots[i]);
  }
  return out;
}

}  // namespace psl
