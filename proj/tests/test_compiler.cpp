#include <doctest.h>

#include "psl/compiler.hpp"
#include "psl/format.hpp"
#include "support.hpp"

using namespace psl;
using psl::test::parse_ok;

namespace
{

const Stylesheet style = Stylesheet::defaults();

std::size_t subject_places(const petri::Net & n)
{
  return static_cast<std::size_t>(std::count_if(n.places.begin(), n.places.end(), [](const petri::Place & p) {
    return p.kind == petri::PlaceKind::subject;
  }));
}

std::vector<const TimelineEntry *> stable(const Timeline & t)
{
  std::vector<const TimelineEntry *> out;
  for (const auto & e : t.entries) {
    if (!e.in_transition) out.push_back(&e);
  }
  return out;
}

}  // namespace

TEST_CASE("a shot without events")
{
  const petri::Net n = compile_shot(parse_ok("MS on A.").shots[0], style);
  CHECK(subject_places(n) == 1);
  CHECK(n.transitions.empty());
  CHECK(check_net(n).empty());
  const auto & a = std::get<petri::SubjectToken>(n.initial.at("subject:A").at(0));
  CHECK(a.screen == Rational(1, 2));
  CHECK(a.profile == Profile::front);
  CHECK(a.size == Size::MS);
}

TEST_CASE("a cross swaps the screen fractions")
{
  const petri::Net n = compile_shot(parse_ok("MS on A and B, A crosses B.").shots[0], style);
  CHECK(subject_places(n) == 2);
  REQUIRE(n.transitions.size() == 1);
  const auto & t = n.transitions[0];
  CHECK(t.changes_composition);
  CHECK(t.duration == Rational(2));
  const petri::Marking after = fire(n, n.initial, t);
  CHECK(std::get<petri::SubjectToken>(after.at("subject:A")[0]).screen == Rational(2, 3));
  CHECK(std::get<petri::SubjectToken>(after.at("subject:B")[0]).screen == Rational(1, 3));
}

TEST_CASE("a pan to rewrites the size and moves the camera")
{
  const petri::Net n = compile_shot(parse_ok("MS on A, pan to CU on A.").shots[0], style);
  REQUIRE(n.transitions.size() == 1);
  const auto & t = n.transitions[0];
  CHECK(t.camera_during == petri::CameraState::moving);
  const petri::Marking after = fire(n, n.initial, t);
  CHECK(std::get<petri::SubjectToken>(n.initial.at("subject:A")[0]).size == Size::MS);
  CHECK(std::get<petri::SubjectToken>(after.at("subject:A")[0]).size == Size::CU);
}

TEST_CASE("one subject place per name in the shot")
{
  const petri::Net n = compile_shot(
    parse_ok("MS on A, lock, B enters from left to MS on A and B, A uses rope, pan to CU on C, MS on B.").shots[0],
    style);
  CHECK(subject_places(n) == 4);  // A, B, C, rope
  CHECK(n.transitions.size() == 4);
}

TEST_CASE("shots are linked through hold and join transitions")
{
  const CompiledStoryboard one = compile(parse_ok("MS on A, A speaks."), style);
  CHECK(one.net == compile_shot(parse_ok("MS on A, A speaks.").shots[0], style));

  const petri::Net cut = compile_storyboard(parse_ok("MS on A. Cut to CU on B."), style);
  REQUIRE(cut.transitions.size() == 2);
  CHECK(cut.transitions[0].label == "hold");
  CHECK(cut.transitions[1].label == "cut");
  CHECK(cut.transitions[1].duration == Rational(0));
  CHECK(cut.transitions[1].changes_composition);

  const petri::Net dissolve = compile_storyboard(parse_ok("MS on A. Dissolve to CU on A."), style);
  CHECK(dissolve.transitions.at(1).duration == Rational(1));
  const Stylesheet slow = parse_stylesheet("duration.dissolve = 5/2");
  CHECK(compile_storyboard(parse_ok("MS on A. Dissolve to CU on A."), slow).transitions.at(1).duration ==
        Rational(5, 2));
}

TEST_CASE("a cut retires and recreates tokens")
{
  const petri::Net n = compile_storyboard(parse_ok("MS on A and B. Cut to CU on A."), style);
  const auto & join = n.transitions.at(1);
  CHECK(std::count(join.inputs.begin(), join.inputs.end(), "subject:A") == 1);
  CHECK(std::count(join.inputs.begin(), join.inputs.end(), "subject:B") == 1);
  const auto trajectory = simulate(n);
  const auto & last = trajectory.back().marking;
  CHECK(petri::token_count(last, "subject:B") == 0);
  CHECK(std::get<petri::SubjectToken>(last.at("subject:A")[0]).size == Size::CU);
  CHECK(std::get<petri::SubjectToken>(last.at("subject:A")[0]).screen == Rational(1, 2));
}

TEST_CASE("unknown durations fall back to one unit with a warning")
{
  Stylesheet sparse = style;
  sparse.duration_by_verb.erase("speak");
  const CompiledStoryboard c = compile(parse_ok("MS on A, A speaks."), sparse);
  CHECK(c.net.transitions.at(0).duration == Rational(1));
  REQUIRE(c.warnings.size() == 1);
  CHECK(c.warnings[0].code == "W301");
}

TEST_CASE("invalid storyboards do not compile")
{
  try {
    (void)compile_storyboard(parse_ok("MS on A, B speaks."), style);
    FAIL("expected CompileError");
  } catch (const CompileError & e) {
    REQUIRE(e.diagnostics().size() == 1);
    CHECK(e.diagnostics()[0].code == "E101");
  }
}

TEST_CASE("timelines")
{
  const Timeline single = timeline(parse_ok("MS on A."), style);
  REQUIRE(single.entries.size() == 1);
  CHECK(single.entries[0].state == StateId::static_camera_fixed_composition);
  CHECK(format(single.entries[0].composition) == "MS on A front at 1/2");

  const Timeline crossed = timeline(parse_ok("MS on A and B, A crosses B."), style);
  REQUIRE(crossed.entries.size() == 2);
  CHECK(format(crossed.entries[0].composition) == "MS on A front at 1/3 and B front at 2/3");
  CHECK(format(crossed.entries[1].composition) == "MS on B front at 1/3 and A front at 2/3");
  CHECK(crossed.entries[0].t1 == Rational(2));
  CHECK(crossed.entries[1].t1 == Rational(3));
}

TEST_CASE("timeline shape across joins")
{
  const Timeline t = timeline(parse_ok("MS on A, A speaks. Dissolve to CU on A. Cut to LS on A, pan to MS on A."), style);
  // (1 + 1) + 1 + (0 + 1) + 1 + (1 + 1) entries: events + 1 per shot, plus two joins
  REQUIRE(t.entries.size() == 7);
  std::vector<bool> transitions;
  std::vector<std::size_t> shots;
  for (const auto & e : t.entries) {
    transitions.push_back(e.in_transition);
    shots.push_back(e.shot_index);
  }
  CHECK(transitions == std::vector<bool>{false, false, true, false, true, false, false});
  CHECK(shots == std::vector<std::size_t>{0, 0, 0, 1, 1, 2, 2});
  for (std::size_t i = 1; i < t.entries.size(); ++i) CHECK(t.entries[i].t0 == t.entries[i - 1].t1);
  CHECK(t.entries[4].t0 == t.entries[4].t1);  // cuts are instantaneous
}

TEST_CASE("lock markers take no time and add no entry")
{
  const Timeline t = timeline(parse_ok("MS on A and B, lock, A crosses B."), style);
  REQUIRE(t.entries.size() == 2);
  CHECK(t.entries[0].state == StateId::static_camera_changing_composition);
  CHECK(t.entries[0].label == "A crosses B");
}

TEST_CASE("timeline matches the reference fold on the corpus")
{
  for (const auto & path : psl::test::corpus_files()) {
    CAPTURE(path.string());
    const Storyboard sb = parse_ok(psl::test::read_file(path));
    const Timeline t = timeline(sb, style);
    std::vector<Composition> expected;
    for (const auto & shot : sb.shots) {
      const auto pictures = psl::test::folded_pictures(shot, style);
      expected.insert(expected.end(), pictures.begin(), pictures.end());
    }
    const auto got = stable(t);
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i]->composition == expected[i]);
  }
}

TEST_CASE("markings and compositions convert both ways")
{
  for (const auto & path : psl::test::corpus_files()) {
    CAPTURE(path.string());
    const CompiledStoryboard c = compile(parse_ok(psl::test::read_file(path)), style);
    for (const auto & iv : simulate(c.net)) {
      petri::Marking subjects;
      for (const auto & [id, tokens] : iv.marking) {
        if (id.rfind("subject:", 0) == 0) subjects[id] = tokens;
      }
      const Composition comp = composition_of(iv.marking);
      CHECK(marking_of(comp) == subjects);
      CHECK(composition_of(marking_of(comp)) == comp);
    }
  }
}

TEST_CASE("timeline json")
{
  const auto j = to_json(timeline(parse_ok("MS on A and B, A crosses B."), style));
  CHECK(j.at("psl_schema") == 1);
  REQUIRE(j.at("entries").size() == 2);
  const auto & e = j.at("entries").at(1);
  CHECK(e.at("t0") == "2");
  CHECK(e.at("t1") == "3");
  CHECK(e.at("state") == 1);
  CHECK(e.at("in_transition") == false);
  CHECK(e.at("composition").at("planes").at(0).at("subjects").at(0).at("name") == "B");
}
