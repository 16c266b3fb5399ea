#include "psl/analysis.hpp"

#include <algorithm>
#include <set>


namespace psl
{

std::string_view to_string(ShotCategory c)
{
  switch (c) {
    case ShotCategory::simple: return "Simple";
    case ShotCategory::complex: return "Complex";
    case ShotCategory::composite: return "Composite";
  }
  return "?";
}

ShotCategory classify_shot(const Shot & shot)
{
  bool pans = false;
  for (const auto & e : shot.events) {
    switch (kind_of(e)) {
      case EventKind::dolly_with:
      case EventKind::dolly_to:
      case EventKind::crane_with:
      case EventKind::crane_to: return ShotCategory::composite;
      case EventKind::pan_with:
      case EventKind::pan_to:
      case EventKind::continue_to: pans = true; break;
      default: break;
    }
  }
  return pans ? ShotCategory::complex : ShotCategory::simple;
}

EventClass event_class(EventKind k)
{
  switch (k) {
    case EventKind::pan_to:
    case EventKind::dolly_to:
    case EventKind::crane_to:
    case EventKind::continue_to:
    case EventKind::move:
    case EventKind::enter:
    case EventKind::exit:
    case EventKind::cross: return EventClass::to_composition;
    default: return EventClass::with_composition;
  }
}

EventClass event_class(const ScreenEvent & e) { return event_class(kind_of(e)); }

namespace
{

struct Slot
{
  std::size_t plane;
  std::size_t index;
};

std::optional<Slot> locate(const Composition & c, std::string_view name)
{
  for (std::size_t p = 0; p < c.planes.size(); ++p) {
    const auto & subjects = c.planes[p].subjects;
    for (std::size_t i = 0; i < subjects.size(); ++i) {
      if (subjects[i].name == name) return Slot{p, i};
    }
  }
  return std::nullopt;
}

Composition cross(const Composition & current, const std::string & a, const std::string & b)
{
  if (a == b) throw ContinuityError(codes::cross_pair, "'" + a + "' cannot cross itself");
  const auto sa = locate(current, a);
  const auto sb = locate(current, b);
  if (!sa || !sb) {
    throw ContinuityError(codes::cross_pair, "cross needs both '" + a + "' and '" + b + "' on screen");
  }
  const std::size_t gap = sa->index > sb->index ? sa->index - sb->index : sb->index - sa->index;
  if (sa->plane != sb->plane || gap != 1) {
    throw ContinuityError(codes::cross_not_adjacent,
                          "'" + a + "' and '" + b + "' are not neighbours in the same plane");
  }
  Composition out = current;
  auto & subjects = out.planes[sa->plane].subjects;
  auto & x = subjects[sa->index];
  auto & y = subjects[sb->index];
  std::swap(x, y);
  std::swap(x.screen, y.screen);
  return out;
}

Composition exit(const Composition & current, const std::string & who)
{
  const auto slot = locate(current, who);
  if (!slot) throw ContinuityError(codes::exit_absent, "'" + who + "' is not on screen and cannot exit");
  if (current.subject_count() == 1) {
    throw ContinuityError(codes::empty_frame, "'" + who + "' is the last subject on screen");
  }
  Composition out = current;
  auto & subjects = out.planes[slot->plane].subjects;
  subjects.erase(subjects.begin() + static_cast<std::ptrdiff_t>(slot->index));
  if (subjects.empty()) out.planes.erase(out.planes.begin() + static_cast<std::ptrdiff_t>(slot->plane));
  return out;
}

}  // namespace

Composition infer_target(const Composition & current, const ScreenEvent & e)
{
  if (const auto * target = explicit_target(e)) return *target;
  if (const auto * a = std::get_if<ActorAction>(&e.action)) {
    if (const auto * c = std::get_if<Cross>(&a->verb)) return cross(current, a->actor, c->other);
    if (std::holds_alternative<Exit>(a->verb)) return exit(current, a->actor);
  }
  return current;
}

std::vector<StateSegment> segment_states(const Shot & shot)
{
  std::vector<StateSegment> out;
  bool following = false;  // a with-form keeps the camera moving
  auto push = [&](std::size_t index, std::optional<std::size_t> event, bool moving, bool changing) {
    const int id = 1 + (moving ? 2 : 0) + (changing ? 1 : 0);
    out.push_back(StateSegment{index, event, moving, changing, static_cast<StateId>(id)});
  };
  for (std::size_t k = 0; k < shot.events.size(); ++k) {
    const EventKind kind = kind_of(shot.events[k]);
    const bool changing = event_class(kind) == EventClass::to_composition;
    switch (kind) {
      case EventKind::lock:
        following = false;
        push(k, k, false, false);
        break;
      case EventKind::pan_with:
      case EventKind::dolly_with:
      case EventKind::crane_with:
        following = true;
        push(k, k, true, false);
        break;
      case EventKind::pan_to:
      case EventKind::dolly_to:
      case EventKind::crane_to:
      case EventKind::continue_to:
        following = false;
        push(k, k, true, true);
        break;
      default:
        push(k, k, following, changing);
        break;
    }
  }
  push(shot.events.size(), std::nullopt, following, false);
  return out;
}

// ---------------------------------------------------------------------------
// validate

namespace
{

Diagnostic make_error(const char * code, Span span, std::string message)
{
  return Diagnostic{Severity::error, code, span, std::move(message)};
}

// Structural checks on one composition; returns the first problem.
std::optional<Diagnostic> check_composition(const Composition & c)
{
  std::set<std::string> seen;
  for (const auto & plane : c.planes) {
    std::optional<Rational> last;
    for (const auto & s : plane.subjects) {
      if (!seen.insert(s.name).second) {
        return make_error(codes::duplicate_subject, s.loc.span,
                          "'" + s.name + "' appears more than once in the composition");
      }
      if (s.screen) {
        const Rational x = s.screen->fraction();
        if (last && !(*last < x)) {
          return make_error(codes::screen_order, s.loc.span,
                            "'" + s.name + "' at " + x.str() +
                              " is not to the right of the previous subject at " + last->str());
        }
        last = x;
      }
    }
  }
  return std::nullopt;
}

std::optional<Diagnostic> check_event(const Composition & current, const ScreenEvent & e)
{
  const Span span = e.loc.span;
  if (const auto * target = explicit_target(e)) {
    if (auto d = check_composition(*target)) return d;
  }
  if (const auto * w = std::get_if<CameraWith>(&e.action)) {
    if (!current.find(w->subject.name)) {
      return make_error(codes::not_on_screen, span,
                        "camera cannot follow '" + w->subject.name + "', who is not on screen");
    }
    return std::nullopt;
  }
  const auto * a = std::get_if<ActorAction>(&e.action);
  if (a == nullptr) return std::nullopt;

  const bool present = current.find(a->actor) != nullptr;
  if (const auto * en = std::get_if<Enter>(&a->verb)) {
    if (present) {
      return make_error(codes::already_on_screen, span, "'" + a->actor + "' is already on screen");
    }
    if (!en->target.find(a->actor)) {
      return make_error(codes::target_lacks_actor, span,
                        "composition after the entrance does not contain '" + a->actor + "'");
    }
    return std::nullopt;
  }
  if (std::holds_alternative<Exit>(a->verb) || std::holds_alternative<Cross>(a->verb)) {
    try {
      (void)infer_target(current, e);
    } catch (const ContinuityError & err) {
      return make_error(err.code(), span, err.what());
    }
    return std::nullopt;
  }
  if (!present) {
    return make_error(codes::not_on_screen, span, "'" + a->actor + "' is not on screen");
  }
  if (const auto * mv = std::get_if<Move>(&a->verb); mv && !mv->target.find(a->actor)) {
    return make_error(codes::target_lacks_actor, span,
                      "composition after the move does not contain '" + a->actor + "'");
  }
  return std::nullopt;
}

}  // namespace

Diagnostics validate(const Storyboard & sb)
{
  Diagnostics out;
  for (const auto & shot : sb.shots) {
    if (auto d = check_composition(shot.initial)) {
      out.push_back(*d);
      continue;
    }
    Composition current = shot.initial;
    bool failed = false;
    for (std::size_t k = 0; k < shot.events.size() && !failed; ++k) {
      const auto & e = shot.events[k];
      if (auto d = check_event(current, e)) {
        out.push_back(*d);
        failed = true;
        break;
      }
      const Composition next = infer_target(current, e);
      // With a static camera a subject can only leave the frame by exiting.
      const EventKind kind = kind_of(e);
      if (kind == EventKind::move || kind == EventKind::enter) {
        std::vector<std::string> dropped;
        for (const auto & name : current.names()) {
          if (!next.find(name)) dropped.push_back(name);
        }
        if (!dropped.empty()) {
          std::string list;
          for (const auto & n : dropped) list += (list.empty() ? "'" : ", '") + n + "'";
          out.push_back(Diagnostic{Severity::warning, codes::dropped_subjects, e.loc.span,
                                   "target composition drops " + list + " without an exit"});
        }
      }
      if (kind == EventKind::lock) {
        const bool actor_follows = k + 1 < shot.events.size() && !is_camera_event(kind_of(shot.events[k + 1]));
        if (!actor_follows) {
          out.push_back(Diagnostic{Severity::warning, codes::idle_lock, e.loc.span,
                                   "lock is not followed by any actor action"});
        }
      }
      current = next;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// stylesheet application

Composition apply_stylesheet(const Composition & c, const Stylesheet & s)
{
  Composition out = c;
  for (auto & plane : out.planes) {
    auto & subjects = plane.subjects;
    const std::size_t n = subjects.size();
    const auto table = s.positions(n);
    for (auto & subj : subjects) {
      if (!subj.profile) subj.profile = s.default_profile;
    }
    std::size_t i = 0;
    while (i < n) {
      if (subjects[i].screen) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < n && !subjects[j].screen) ++j;
      const Rational lo = i > 0 ? subjects[i - 1].screen->fraction() : Rational(0);
      const Rational hi = j < n ? subjects[j].screen->fraction() : Rational(1);
      bool table_fits = true;
      for (std::size_t k = i; k < j; ++k) {
        table_fits = table_fits && k < table.size() && lo < table[k] && table[k] < hi;
      }
      const auto run = static_cast<std::int64_t>(j - i);
      for (std::size_t k = i; k < j; ++k) {
        const auto step = static_cast<std::int64_t>(k - i + 1);
        const Rational x = table_fits ? table[k] : lo + (hi - lo) * Rational(step, run + 1);
        subjects[k].screen = ScreenPosition{x};
      }
      i = j;
    }
  }
  return out;
}

Composition resolve_positions(const Composition & c)
{
  Composition out = c;
  for (auto & plane : out.planes) {
    for (auto & s : plane.subjects) {
      if (s.screen) s.screen = ScreenPosition{s.screen->fraction()};
    }
  }
  return out;
}

bool fully_specified(const Composition & c)
{
  for (const auto & plane : c.planes) {
    for (const auto & s : plane.subjects) {
      if (!s.profile || !s.screen) return false;
    }
  }
  return true;
}

}  // namespace psl
