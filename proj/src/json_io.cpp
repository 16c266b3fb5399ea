#include "psl/json_io.hpp"

#include <string>
#include <type_traits>

namespace psl
{

std::string_view json_name(Profile p)
{
  switch (p) {
    case Profile::front: return "front";
    case Profile::three_quarter_left: return "three-quarter-left";
    case Profile::left: return "left";
    case Profile::three_quarter_back_left: return "three-quarter-back-left";
    case Profile::back: return "back";
    case Profile::three_quarter_back_right: return "three-quarter-back-right";
    case Profile::right: return "right";
    case Profile::three_quarter_front_right: return "three-quarter-front-right";
  }
  return "front";
}

std::string_view json_name(Anchor a)
{
  switch (a) {
    case Anchor::far_left: return "far-left";
    case Anchor::left: return "left";
    case Anchor::center: return "center";
    case Anchor::right: return "right";
    case Anchor::far_right: return "far-right";
  }
  return "center";
}

Json to_json(const SubjectSpec & s)
{
  Json j;
  j["name"] = s.name;
  j["profile"] = s.profile ? Json(json_name(*s.profile)) : Json(nullptr);
  if (!s.screen) {
    j["screen"] = nullptr;
  } else if (const auto * a = std::get_if<Anchor>(&s.screen->value)) {
    j["screen"] = {{"anchor", json_name(*a)}};
  } else {
    j["screen"] = {{"fraction", std::get<Rational>(s.screen->value).str()}};
  }
  return j;
}

Json to_json(const Composition & c)
{
  Json planes = Json::array();
  for (const auto & f : c.planes) {
    Json subjects = Json::array();
    for (const auto & s : f.subjects) subjects.push_back(to_json(s));
    planes.push_back({{"size", to_string(f.size)}, {"subjects", std::move(subjects)}});
  }
  return {{"planes", std::move(planes)}};
}

Json to_json(const ScreenEvent & e)
{
  Json j;
  j["kind"] = to_string(kind_of(e));
  std::visit(
    [&](const auto & a) {
      using T = std::decay_t<decltype(a)>;
      if constexpr (std::is_same_v<T, CameraWith>) {
        j["subject"] = to_json(a.subject);
      } else if constexpr (std::is_same_v<T, CameraTo> || std::is_same_v<T, ContinueTo>) {
        j["target"] = to_json(a.target);
      } else if constexpr (std::is_same_v<T, ActorAction>) {
        j["actor"] = a.actor;
        std::visit(
          [&](const auto & v) {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, Enter>) {
              j["from"] = to_string(v.from);
              j["target"] = to_json(v.target);
            } else if constexpr (std::is_same_v<V, Exit>) {
              j["to"] = to_string(v.to);
            } else if constexpr (std::is_same_v<V, Cross>) {
              j["other"] = v.other;
            } else if constexpr (std::is_same_v<V, Move>) {
              j["target"] = to_json(v.target);
            } else if constexpr (std::is_same_v<V, React>) {
              j["to"] = v.to ? Json(*v.to) : Json(nullptr);
            } else if constexpr (std::is_same_v<V, Use> || std::is_same_v<V, Touch>) {
              j["object"] = v.object;
            }
          },
          a.verb);
      }
    },
    e.action);
  return j;
}

Json to_json(const Shot & s)
{
  Json events = Json::array();
  for (const auto & e : s.events) events.push_back(to_json(e));
  return {{"initial", to_json(s.initial)}, {"events", std::move(events)}};
}

Json to_json(const Storyboard & sb)
{
  Json shots = Json::array();
  for (const auto & s : sb.shots) shots.push_back(to_json(s));
  Json joins = Json::array();
  for (auto j : sb.joins) joins.push_back(to_string(j));
  return {{"psl_schema", schema_version}, {"shots", std::move(shots)}, {"joins", std::move(joins)}};
}

Json to_json(const Diagnostic & d)
{
  return {{"psl_schema", schema_version},
          {"code", d.code},
          {"severity", to_string(d.severity)},
          {"span", {d.span.begin, d.span.end}},
          {"message", d.message}};
}

// ---------------------------------------------------------------------------
// import

namespace
{

[[noreturn]] void fail(const std::string & what) { throw JsonSchemaError(what); }

const Json & field(const Json & j, const char * key)
{
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string string_field(const Json & j, const char * key)
{
  const Json & v = field(j, key);
  if (!v.is_string()) fail(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::string name_field(const Json & j, const char * key)
{
  std::string n = string_field(j, key);
  if (!is_valid_name(n)) fail("invalid subject name '" + n + "'");
  return n;
}

template <typename E, std::size_t N>
E enum_from(const std::array<E, N> & values, const std::string & text, std::string_view (*name)(E),
            const char * what)
{
  for (auto v : values) {
    if (name(v) == text) return v;
  }
  fail(std::string("unknown ") + what + " '" + text + "'");
}

std::string_view size_name(Size s) { return to_string(s); }
std::string_view profile_name(Profile p) { return json_name(p); }
std::string_view anchor_name(Anchor a) { return json_name(a); }
std::string_view side_name(Side s) { return to_string(s); }
std::string_view move_name(CameraMove m) { return to_string(m); }
std::string_view join_name(ShotJoin j) { return to_string(j); }

constexpr std::array<Side, 2> k_sides = {Side::left, Side::right};
constexpr std::array<ShotJoin, 2> k_joins = {ShotJoin::cut, ShotJoin::dissolve};

SubjectSpec subject_from_json(const Json & j)
{
  SubjectSpec s;
  s.name = name_field(j, "name");
  const Json & p = field(j, "profile");
  if (!p.is_null()) {
    if (!p.is_string()) fail("profile must be a string or null");
    s.profile = enum_from(all_profiles, p.get<std::string>(), profile_name, "profile");
  }
  const Json & scr = field(j, "screen");
  if (!scr.is_null()) {
    if (scr.contains("anchor")) {
      s.screen = ScreenPosition{enum_from(all_anchors, string_field(scr, "anchor"), anchor_name, "anchor")};
    } else {
      const auto text = string_field(scr, "fraction");
      std::optional<Rational> r;
      try {
        r = Rational::parse(text);
      } catch (const std::exception &) {
      }
      if (!r || *r <= Rational(0) || *r >= Rational(1)) fail("fraction '" + text + "' outside (0,1)");
      s.screen = ScreenPosition{*r};
    }
  }
  return s;
}

ScreenEvent event_from_json(const Json & j)
{
  const std::string kind = string_field(j, "kind");
  EventKind k{};
  bool found = false;
  for (auto candidate : all_event_kinds()) {
    if (to_string(candidate) == kind) {
      k = candidate;
      found = true;
    }
  }
  if (!found) fail("unknown event kind '" + kind + "'");

  ScreenEvent e;
  auto camera_move = [&](std::string_view prefix) {
    return enum_from(std::array{CameraMove::pan, CameraMove::dolly, CameraMove::crane},
                     std::string(prefix), move_name, "camera move");
  };
  switch (k) {
    case EventKind::lock: e.action = Lock{}; break;
    case EventKind::pan_with:
    case EventKind::dolly_with:
    case EventKind::crane_with:
      e.action = CameraWith{camera_move(kind.substr(0, kind.find('_'))), subject_from_json(field(j, "subject"))};
      break;
    case EventKind::pan_to:
    case EventKind::dolly_to:
    case EventKind::crane_to:
      e.action = CameraTo{camera_move(kind.substr(0, kind.find('_'))), composition_from_json(field(j, "target"))};
      break;
    case EventKind::continue_to: e.action = ContinueTo{composition_from_json(field(j, "target"))}; break;
    default: {
      ActorAction a;
      a.actor = name_field(j, "actor");
      switch (k) {
        case EventKind::enter:
          a.verb = Enter{enum_from(k_sides, string_field(j, "from"), side_name, "side"),
                         composition_from_json(field(j, "target"))};
          break;
        case EventKind::exit: a.verb = Exit{enum_from(k_sides, string_field(j, "to"), side_name, "side")}; break;
        case EventKind::cross: a.verb = Cross{name_field(j, "other")}; break;
        case EventKind::move: a.verb = Move{composition_from_json(field(j, "target"))}; break;
        case EventKind::speak: a.verb = Speak{}; break;
        case EventKind::react: {
          React r;
          if (j.contains("to") && !j.at("to").is_null()) r.to = name_field(j, "to");
          a.verb = r;
          break;
        }
        case EventKind::use: a.verb = Use{name_field(j, "object")}; break;
        default: a.verb = Touch{name_field(j, "object")}; break;
      }
      e.action = std::move(a);
    }
  }
  return e;
}

const Json & array_field(const Json & j, const char * key, bool non_empty)
{
  const Json & v = field(j, key);
  if (!v.is_array()) fail(std::string("field '") + key + "' must be an array");
  if (non_empty && v.empty()) fail(std::string("field '") + key + "' must not be empty");
  return v;
}

}  // namespace

Composition composition_from_json(const Json & j)
{
  Composition c;
  for (const auto & pj : array_field(j, "planes", true)) {
    FlatComposition f;
    f.size = enum_from(all_sizes, string_field(pj, "size"), size_name, "size");
    for (const auto & sj : array_field(pj, "subjects", true)) f.subjects.push_back(subject_from_json(sj));
    c.planes.push_back(std::move(f));
  }
  return c;
}

Storyboard storyboard_from_json(const Json & j)
{
  Storyboard sb;
  if (j.is_object() && j.contains("psl_schema") && j["psl_schema"] != schema_version) {
    fail("unsupported psl_schema " + j["psl_schema"].dump());
  }
  for (const auto & sj : array_field(j, "shots", true)) {
    Shot s;
    s.initial = composition_from_json(field(sj, "initial"));
    for (const auto & ej : array_field(sj, "events", false)) s.events.push_back(event_from_json(ej));
    sb.shots.push_back(std::move(s));
  }
  for (const auto & jj : array_field(j, "joins", false)) {
    if (!jj.is_string()) fail("join must be a string");
    sb.joins.push_back(enum_from(k_joins, jj.get<std::string>(), join_name, "join"));
  }
  if (sb.joins.size() + 1 != sb.shots.size()) fail("joins must number shots - 1");
  return sb;
}

}  // namespace psl
