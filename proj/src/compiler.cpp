#include "psl/compiler.hpp"

#include <algorithm>
#include <map>

#include "psl/format.hpp"
#include "psl/json_io.hpp"

namespace psl
{

CompileError::CompileError(Diagnostics diagnostics)
: std::runtime_error(diagnostics.empty() ? std::string("compile error")
                                         : diagnostics.front().code + " " + diagnostics.front().message),
  diagnostics_(std::move(diagnostics))
{
}

std::string subject_place(std::string_view name) { return "subject:" + std::string(name); }
std::string control_place(std::size_t k) { return "control:" + std::to_string(k); }

petri::Marking marking_of(const Composition & c)
{
  petri::Marking m;
  for (std::size_t p = 0; p < c.planes.size(); ++p) {
    const auto & plane = c.planes[p];
    for (const auto & s : plane.subjects) {
      if (!s.profile || !s.screen) {
        throw std::invalid_argument("marking_of needs a fully specified composition ('" + s.name + "')");
      }
      m[subject_place(s.name)].push_back(
        petri::SubjectToken{plane.size, *s.profile, s.screen->fraction(), static_cast<int>(p)});
    }
  }
  return m;
}

Composition composition_of(const petri::Marking & m)
{
  struct Entry
  {
    std::string name;
    petri::SubjectToken token;
  };
  std::map<int, std::vector<Entry>> planes;
  constexpr std::string_view prefix = "subject:";
  for (const auto & [id, tokens] : m) {
    if (id.rfind(prefix, 0) != 0) continue;
    for (const auto & t : tokens) {
      if (const auto * s = std::get_if<petri::SubjectToken>(&t)) {
        planes[s->plane].push_back(Entry{id.substr(prefix.size()), *s});
      }
    }
  }
  Composition c;
  for (auto & [index, entries] : planes) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry & a, const Entry & b) { return a.token.screen < b.token.screen; });
    FlatComposition flat;
    flat.size = entries.front().token.size;
    for (const auto & e : entries) {
      flat.subjects.push_back(SubjectSpec{e.name, e.token.profile, ScreenPosition{e.token.screen}, {}});
    }
    c.planes.push_back(std::move(flat));
  }
  return c;
}

namespace
{

Composition complete(const Composition & c, const Stylesheet & s)
{
  return resolve_positions(apply_stylesheet(c, s));
}

// Subject tokens of a completed composition keyed by name.
std::map<std::string, petri::SubjectToken> tokens_by_name(const Composition & c)
{
  std::map<std::string, petri::SubjectToken> out;
  for (const auto & [id, tokens] : marking_of(c)) {
    out.emplace(id.substr(std::string_view("subject:").size()), std::get<petri::SubjectToken>(tokens.front()));
  }
  return out;
}

petri::SubjectPatch diff(const std::optional<petri::SubjectToken> & before, const petri::SubjectToken & after)
{
  petri::SubjectPatch p;
  if (!before || before->size != after.size) p.size = after.size;
  if (!before || before->profile != after.profile) p.profile = after.profile;
  if (!before || before->screen != after.screen) p.screen = after.screen;
  if (!before || before->plane != after.plane) p.plane = after.plane;
  return p;
}

class ChainBuilder
{
public:
  ChainBuilder(const Storyboard & sb, const Stylesheet & style) : sb_(sb), style_(style) {}

  CompiledStoryboard build()
  {
    add_subject_places();
    out_.net.places.push_back(petri::Place{std::string(camera_place), petri::PlaceKind::camera});

    Composition state = complete(sb_.shots.front().initial, style_);
    out_.net.initial = marking_of(state);
    out_.net.initial[std::string(camera_place)].push_back(petri::CameraToken{});
    out_.net.initial[control_place(0)].push_back(petri::ControlToken{});

    for (std::size_t i = 0; i < sb_.shots.size(); ++i) {
      const Shot & shot = sb_.shots[i];
      out_.segments.push_back(segment_states(shot));
      if (i > 0) {
        add_hold(i - 1);
        const Composition next = complete(shot.initial, style_);
        add_join(i - 1, sb_.joins[i - 1], state, next);
        state = next;
      }
      for (std::size_t k = 0; k < shot.events.size(); ++k) {
        const ScreenEvent & e = shot.events[k];
        const Composition next = complete(infer_target(state, e), style_);
        add_event(i, k, e, state, next);
        state = next;
      }
    }
    for (std::size_t k = 0; k <= out_.net.transitions.size(); ++k) {
      out_.net.places.push_back(petri::Place{control_place(k), petri::PlaceKind::control});
    }
    return std::move(out_);
  }

private:
  void add_subject_places()
  {
    std::vector<std::string> order;
    auto note = [&](const std::string & n) {
      if (std::find(order.begin(), order.end(), n) == order.end()) order.push_back(n);
    };
    auto note_all = [&](const Composition & c) {
      for (const auto & n : c.names()) note(n);
    };
    for (const auto & shot : sb_.shots) {
      note_all(shot.initial);
      for (const auto & e : shot.events) {
        if (const auto * t = explicit_target(e)) note_all(*t);
        if (const auto * w = std::get_if<CameraWith>(&e.action)) note(w->subject.name);
        if (const auto * a = std::get_if<ActorAction>(&e.action)) {
          note(a->actor);
          if (const auto * c = std::get_if<Cross>(&a->verb)) note(c->other);
          if (const auto * r = std::get_if<React>(&a->verb); r && r->to) note(*r->to);
          if (const auto * u = std::get_if<Use>(&a->verb)) note(u->object);
          if (const auto * t = std::get_if<Touch>(&a->verb)) note(t->object);
        }
      }
    }
    for (const auto & n : order) out_.net.places.push_back(petri::Place{subject_place(n), petri::PlaceKind::subject});
  }

  Rational duration_for(std::string_view key, Span span)
  {
    if (auto d = style_.duration(key)) return *d;
    out_.warnings.push_back(Diagnostic{Severity::warning, codes::duration_fallback, span,
                                       "no duration for '" + std::string(key) + "', using 1"});
    return Rational(1);
  }

  petri::Transition & start(std::string label, Rational duration)
  {
    const std::size_t k = out_.net.transitions.size();
    petri::Transition t;
    t.id = "t" + std::to_string(k);
    t.label = std::move(label);
    t.duration = duration;
    t.inputs.push_back(control_place(k));
    t.outputs.push_back(control_place(k + 1));
    out_.net.transitions.push_back(std::move(t));
    return out_.net.transitions.back();
  }

  void add_hold(std::size_t shot)
  {
    auto & t = start("hold", duration_for(hold_key, Span{}));
    t.camera_during = out_.segments[shot].back().camera_moving ? petri::CameraState::moving : petri::CameraState::still;
    out_.roles.push_back(TransitionRole{TransitionRole::Kind::hold, shot, 0});
  }

  // Consumes every token of `before`, produces every token of `after`.
  void add_join(std::size_t shot, ShotJoin join, const Composition & before, const Composition & after)
  {
    auto & t = start(std::string(to_string(join)), duration_for(duration_key(join), Span{}));
    t.changes_composition = true;
    t.inputs.emplace_back(camera_place);
    t.outputs.emplace_back(camera_place);
    t.effect.push_back(petri::Rewrite{std::string(camera_place), petri::CameraToken{petri::CameraState::still}});
    for (const auto & n : before.names()) t.inputs.push_back(subject_place(n));
    for (const auto & [name, token] : tokens_by_name(after)) {
      t.outputs.push_back(subject_place(name));
      t.effect.push_back(petri::Rewrite{subject_place(name), diff(std::nullopt, token)});
    }
    out_.roles.push_back(TransitionRole{TransitionRole::Kind::join, shot, 0});
  }

  void add_event(std::size_t shot, std::size_t k, const ScreenEvent & e, const Composition & before,
                 const Composition & after)
  {
    const EventKind kind = kind_of(e);
    auto & t = start(format(e), duration_for(duration_key(kind), e.loc.span));
    const auto & segment = out_.segments[shot][k];
    t.camera_during = segment.camera_moving ? petri::CameraState::moving : petri::CameraState::still;
    t.changes_composition = event_class(kind) == EventClass::to_composition;

    if (is_camera_event(kind)) {
      t.inputs.emplace_back(camera_place);
      t.outputs.emplace_back(camera_place);
      const bool follows = kind == EventKind::pan_with || kind == EventKind::dolly_with || kind == EventKind::crane_with;
      t.effect.push_back(petri::Rewrite{
        std::string(camera_place),
        petri::CameraToken{follows ? petri::CameraState::moving : petri::CameraState::still}});
    }

    const auto pre = tokens_by_name(before);
    const auto post = tokens_by_name(after);
    std::vector<std::string> touched;
    if (const auto * a = std::get_if<ActorAction>(&e.action); a && pre.count(a->actor)) {
      touched.push_back(a->actor);
    }
    if (t.changes_composition) {
      for (const auto & [name, token] : pre) {
        auto it = post.find(name);
        if (it == post.end() || !(it->second == token)) touched.push_back(name);
      }
      for (const auto & [name, token] : post) {
        if (!pre.count(name)) touched.push_back(name);
      }
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());

    for (const auto & name : touched) {
      const auto was = pre.find(name);
      const auto now = post.find(name);
      if (was != pre.end()) t.inputs.push_back(subject_place(name));
      if (now == post.end()) continue;
      t.outputs.push_back(subject_place(name));
      const auto patch = diff(was == pre.end() ? std::nullopt : std::optional(was->second), now->second);
      if (!(patch == petri::SubjectPatch{})) t.effect.push_back(petri::Rewrite{subject_place(name), patch});
    }
    out_.roles.push_back(TransitionRole{TransitionRole::Kind::event, shot, k});
  }

  const Storyboard & sb_;
  const Stylesheet & style_;
  CompiledStoryboard out_;
};

}  // namespace

CompiledStoryboard compile(const Storyboard & sb, const Stylesheet & s)
{
  Diagnostics diags = validate(sb);
  if (has_errors(diags)) {
    diags.erase(std::remove_if(diags.begin(), diags.end(),
                               [](const Diagnostic & d) { return d.severity != Severity::error; }),
                diags.end());
    throw CompileError(std::move(diags));
  }
  if (sb.shots.empty() || sb.joins.size() + 1 != sb.shots.size()) {
    throw std::invalid_argument("storyboard needs at least one shot and shots - 1 joins");
  }
  return ChainBuilder(sb, s).build();
}

petri::Net compile_storyboard(const Storyboard & sb, const Stylesheet & s) { return compile(sb, s).net; }

petri::Net compile_shot(const Shot & shot, const Stylesheet & s)
{
  Storyboard sb;
  sb.shots.push_back(shot);
  return compile(sb, s).net;
}

Timeline timeline(const Storyboard & sb, const Stylesheet & s)
{
  CompiledStoryboard compiled = compile(sb, s);
  const Rational hold = s.duration(hold_key).value_or(Rational(1));
  const petri::Trajectory trajectory = petri::simulate(compiled.net, hold);

  Timeline out;
  out.warnings = std::move(compiled.warnings);
  for (const auto & iv : trajectory) {
    TimelineEntry entry;
    entry.t0 = iv.t0;
    entry.t1 = iv.t1;
    entry.composition = composition_of(iv.marking);
    if (!iv.transition) {
      entry.shot_index = sb.shots.size() - 1;
      entry.state = compiled.segments.back().back().state;
      entry.label = "hold";
    } else {
      const TransitionRole & role = compiled.roles[*iv.transition];
      const auto & segments = compiled.segments[role.shot];
      entry.shot_index = role.shot;
      entry.label = compiled.net.transitions[*iv.transition].label;
      switch (role.kind) {
        case TransitionRole::Kind::event: entry.state = segments[role.event].state; break;
        case TransitionRole::Kind::hold: entry.state = segments.back().state; break;
        case TransitionRole::Kind::join:
          entry.in_transition = true;
          entry.state = StateId::static_camera_fixed_composition;
          break;
      }
    }
    if (!entry.in_transition && entry.t0 == entry.t1) continue;
    out.entries.push_back(std::move(entry));
  }
  return out;
}

nlohmann::json to_json(const Timeline & t)
{
  nlohmann::json entries = nlohmann::json::array();
  for (const auto & e : t.entries) {
    entries.push_back({{"t0", e.t0.str()},
                       {"t1", e.t1.str()},
                       {"shot", e.shot_index},
                       {"state", to_int(e.state)},
                       {"in_transition", e.in_transition},
                       {"label", e.label},
                       {"text", format(e.composition)},
                       {"composition", to_json(e.composition)}});
  }
  return {{"psl_schema", schema_version}, {"entries", std::move(entries)}};
}

}  // namespace psl
