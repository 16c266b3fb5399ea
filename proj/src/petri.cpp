#include "psl/petri.hpp"

#include <algorithm>
#include <set>

#include "psl/json_io.hpp"

namespace psl::petri
{

const Place * Net::place(std::string_view id) const
{
  for (const auto & p : places) {
    if (p.id == id) return &p;
  }
  return nullptr;
}

std::string_view to_string(PlaceKind k)
{
  switch (k) {
    case PlaceKind::subject: return "subject";
    case PlaceKind::camera: return "camera";
    case PlaceKind::control: return "control";
  }
  return "?";
}

std::string_view to_string(CameraState s) { return s == CameraState::still ? "static" : "moving"; }

std::vector<std::string> check_net(const Net & net)
{
  std::vector<std::string> problems;
  std::set<std::string> ids;
  for (const auto & p : net.places) {
    if (!ids.insert(p.id).second) problems.push_back("duplicate place '" + p.id + "'");
  }
  auto known = [&](const std::string & id) { return ids.count(id) > 0; };
  for (const auto & t : net.transitions) {
    if (t.duration < Rational(0)) problems.push_back(t.id + ": negative duration");
    for (const auto & id : t.inputs) {
      if (!known(id)) problems.push_back(t.id + ": unknown input place '" + id + "'");
    }
    for (const auto & id : t.outputs) {
      if (!known(id)) problems.push_back(t.id + ": unknown output place '" + id + "'");
    }
    for (const auto & r : t.effect) {
      if (!known(r.place)) problems.push_back(t.id + ": rewrite of unknown place '" + r.place + "'");
      if (std::find(t.outputs.begin(), t.outputs.end(), r.place) == t.outputs.end()) {
        problems.push_back(t.id + ": rewrite of '" + r.place + "' which is not an output");
      }
      if (!t.changes_composition && std::holds_alternative<SubjectPatch>(r.value)) {
        problems.push_back(t.id + ": composition-maintaining transition rewrites '" + r.place + "'");
      }
    }
    if (!t.changes_composition) {
      // Identity on subjects: every subject place consumed is given back.
      for (const auto & id : t.inputs) {
        const auto * p = net.place(id);
        if (p && p->kind == PlaceKind::subject &&
            std::count(t.inputs.begin(), t.inputs.end(), id) !=
              std::count(t.outputs.begin(), t.outputs.end(), id)) {
          problems.push_back(t.id + ": composition-maintaining transition moves subject '" + id + "'");
        }
      }
      for (const auto & id : t.outputs) {
        const auto * p = net.place(id);
        if (p && p->kind == PlaceKind::subject &&
            std::find(t.inputs.begin(), t.inputs.end(), id) == t.inputs.end()) {
          problems.push_back(t.id + ": composition-maintaining transition creates subject '" + id + "'");
        }
      }
    }
  }
  for (const auto & [id, tokens] : net.initial) {
    if (!tokens.empty() && !known(id)) problems.push_back("initial marking uses unknown place '" + id + "'");
  }
  return problems;
}

std::size_t token_count(const Marking & m, const std::string & place)
{
  auto it = m.find(place);
  return it == m.end() ? 0 : it->second.size();
}

std::vector<std::string> check_marking(const Net & net, const Marking & m)
{
  std::vector<std::string> problems;
  std::size_t control = 0;
  std::size_t camera = 0;
  for (const auto & p : net.places) {
    const std::size_t n = token_count(m, p.id);
    switch (p.kind) {
      case PlaceKind::control: control += n; break;
      case PlaceKind::camera: camera += n; break;
      case PlaceKind::subject:
        if (n > 1) problems.push_back("subject place '" + p.id + "' holds " + std::to_string(n) + " tokens");
        break;
    }
  }
  if (control != 1) problems.push_back(std::to_string(control) + " control tokens");
  if (camera != 1) problems.push_back(std::to_string(camera) + " camera tokens");
  return problems;
}

namespace
{

bool is_enabled(const Marking & m, const Transition & t)
{
  std::map<std::string, std::size_t> need;
  for (const auto & id : t.inputs) ++need[id];
  return std::all_of(need.begin(), need.end(),
                     [&](const auto & kv) { return token_count(m, kv.first) >= kv.second; });
}

Token fresh_token(PlaceKind kind)
{
  switch (kind) {
    case PlaceKind::camera: return CameraToken{};
    case PlaceKind::control: return ControlToken{};
    case PlaceKind::subject: break;
  }
  return ControlToken{};  // replaced below; subjects have no default
}

}  // namespace

std::vector<const Transition *> enabled(const Net & net, const Marking & m)
{
  std::vector<const Transition *> out;
  for (const auto & t : net.transitions) {
    if (is_enabled(m, t)) out.push_back(&t);
  }
  return out;
}

Marking fire(const Net & net, const Marking & m, const Transition & t)
{
  if (!is_enabled(m, t)) throw PetriError("transition " + t.id + " is not enabled");
  Marking next = m;
  std::map<std::string, std::vector<Token>> consumed;
  for (const auto & id : t.inputs) {
    auto & tokens = next[id];
    consumed[id].push_back(tokens.front());
    tokens.erase(tokens.begin());
  }
  for (const auto & id : t.outputs) {
    const Place * place = net.place(id);
    if (place == nullptr) throw PetriError(t.id + ": unknown output place '" + id + "'");

    std::optional<Token> token;
    if (auto it = consumed.find(id); it != consumed.end() && !it->second.empty()) {
      token = it->second.front();
      it->second.erase(it->second.begin());
    } else if (place->kind != PlaceKind::subject) {
      token = fresh_token(place->kind);
    }

    auto rw = std::find_if(t.effect.begin(), t.effect.end(), [&](const Rewrite & r) { return r.place == id; });
    if (rw != t.effect.end()) {
      if (const auto * cam = std::get_if<CameraToken>(&rw->value)) {
        token = *cam;
      } else {
        const auto & patch = std::get<SubjectPatch>(rw->value);
        if (!token) {
          if (!patch.size || !patch.profile || !patch.screen || !patch.plane) {
            throw PetriError(t.id + ": new token for '" + id + "' is missing attributes");
          }
          token = SubjectToken{*patch.size, *patch.profile, *patch.screen, *patch.plane};
        } else {
          auto * subject = std::get_if<SubjectToken>(&*token);
          if (subject == nullptr) throw PetriError(t.id + ": subject rewrite on non-subject place '" + id + "'");
          if (patch.size) subject->size = *patch.size;
          if (patch.profile) subject->profile = *patch.profile;
          if (patch.screen) subject->screen = *patch.screen;
          if (patch.plane) subject->plane = *patch.plane;
        }
      }
    }
    if (!token) throw PetriError(t.id + ": no token to place on subject '" + id + "'");
    next[id].push_back(*token);
  }
  // Keep markings canonical so equal states compare equal.
  for (auto it = next.begin(); it != next.end();) {
    it = it->second.empty() ? next.erase(it) : std::next(it);
  }
  return next;
}

Trajectory simulate(const Net & net, Rational terminal_hold, std::size_t max_steps)
{
  Trajectory out;
  Marking m = net.initial;
  for (auto it = m.begin(); it != m.end();) {
    it = it->second.empty() ? m.erase(it) : std::next(it);
  }
  Rational clock(0);
  for (std::size_t step = 0;; ++step) {
    const auto ready = enabled(net, m);
    if (ready.size() > 1) {
      throw PetriError("net branches: " + std::to_string(ready.size()) + " transitions enabled at once");
    }
    if (ready.empty()) {
      out.push_back(Interval{clock, clock + terminal_hold, m, std::nullopt, false});
      return out;
    }
    if (step >= max_steps) throw PetriError("simulation exceeded " + std::to_string(max_steps) + " firings");
    const Transition & t = *ready.front();
    const auto index = static_cast<std::size_t>(&t - net.transitions.data());
    const bool pending = t.changes_composition && t.duration > Rational(0);
    out.push_back(Interval{clock, clock + t.duration, m, index, pending});
    m = fire(net, m, t);
    clock += t.duration;
  }
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::json to_json(const Token & t)
{
  if (const auto * s = std::get_if<SubjectToken>(&t)) {
    return {{"size", to_string(s->size)},
            {"profile", json_name(s->profile)},
            {"screen", s->screen.str()},
            {"plane", s->plane}};
  }
  if (const auto * c = std::get_if<CameraToken>(&t)) return {{"camera", to_string(c->state)}};
  return nlohmann::json::object();
}

nlohmann::json to_json(const Marking & m)
{
  nlohmann::json j = nlohmann::json::object();
  for (const auto & [id, tokens] : m) {
    if (tokens.empty()) continue;
    auto & list = j[id] = nlohmann::json::array();
    for (const auto & t : tokens) list.push_back(to_json(t));
  }
  return j;
}

nlohmann::json to_json(const Net & net)
{
  nlohmann::json places = nlohmann::json::array();
  for (const auto & p : net.places) places.push_back({{"id", p.id}, {"kind", to_string(p.kind)}});
  nlohmann::json transitions = nlohmann::json::array();
  for (const auto & t : net.transitions) {
    nlohmann::json effect = nlohmann::json::array();
    for (const auto & r : t.effect) {
      nlohmann::json e = {{"place", r.place}};
      if (const auto * cam = std::get_if<CameraToken>(&r.value)) {
        e["camera"] = to_string(cam->state);
      } else {
        const auto & p = std::get<SubjectPatch>(r.value);
        if (p.size) e["size"] = to_string(*p.size);
        if (p.profile) e["profile"] = json_name(*p.profile);
        if (p.screen) e["screen"] = p.screen->str();
        if (p.plane) e["plane"] = *p.plane;
      }
      effect.push_back(std::move(e));
    }
    transitions.push_back({{"id", t.id},
                           {"label", t.label},
                           {"duration", t.duration.str()},
                           {"inputs", t.inputs},
                           {"outputs", t.outputs},
                           {"effect", std::move(effect)},
                           {"changes_composition", t.changes_composition},
                           {"camera_during", to_string(t.camera_during)}});
  }
  return {{"psl_schema", schema_version},
          {"places", std::move(places)},
          {"transitions", std::move(transitions)},
          {"initial_marking", to_json(net.initial)}};
}

nlohmann::json to_json(const Trajectory & trajectory)
{
  nlohmann::json intervals = nlohmann::json::array();
  for (const auto & iv : trajectory) {
    intervals.push_back({{"t0", iv.t0.str()},
                         {"t1", iv.t1.str()},
                         {"transition", iv.transition ? nlohmann::json(*iv.transition) : nlohmann::json(nullptr)},
                         {"in_transition", iv.in_transition},
                         {"marking", to_json(iv.marking)}});
  }
  return {{"psl_schema", schema_version}, {"intervals", std::move(intervals)}};
}

}  // namespace psl::petri
