#include <doctest.h>

#include "psl/petri.hpp"

using namespace psl;
using namespace psl::petri;

namespace
{

SubjectToken token(Rational screen, Size size = Size::MS) { return SubjectToken{size, Profile::front, screen, 0}; }

// Two subjects, a camera and a chain of control places c0..cn.
Net base_net(std::size_t chain)
{
  Net n;
  n.places = {{"A", PlaceKind::subject}, {"B", PlaceKind::subject}, {"camera", PlaceKind::camera}};
  for (std::size_t k = 0; k <= chain; ++k) n.places.push_back({"c" + std::to_string(k), PlaceKind::control});
  n.initial = {{"A", {token(Rational(1, 3))}},
               {"B", {token(Rational(2, 3))}},
               {"camera", {CameraToken{}}},
               {"c0", {ControlToken{}}}};
  return n;
}

Transition step(std::size_t k, std::string label, Rational d)
{
  Transition t;
  t.id = "t" + std::to_string(k);
  t.label = std::move(label);
  t.duration = d;
  t.inputs = {"c" + std::to_string(k)};
  t.outputs = {"c" + std::to_string(k + 1)};
  return t;
}

// speak (2 units, identity) then pan to CU on A (2 units).
Net speak_then_pan()
{
  Net n = base_net(2);
  Transition speak = step(0, "A speaks", Rational(2));
  speak.inputs.push_back("A");
  speak.outputs.push_back("A");
  Transition pan = step(1, "pan to CU on A", Rational(2));
  pan.changes_composition = true;
  pan.camera_during = CameraState::moving;
  pan.inputs.insert(pan.inputs.end(), {"camera", "A", "B"});
  pan.outputs.insert(pan.outputs.end(), {"camera", "A"});
  pan.effect = {Rewrite{"A", SubjectPatch{Size::CU, std::nullopt, Rational(1, 2), std::nullopt}},
                Rewrite{"camera", CameraToken{CameraState::still}}};
  n.transitions = {speak, pan};
  return n;
}

}  // namespace

TEST_CASE("a net without transitions")
{
  const Net n = base_net(0);
  CHECK(check_net(n).empty());
  CHECK(enabled(n, n.initial).empty());
  const Trajectory t = simulate(n, Rational(3));
  REQUIRE(t.size() == 1);
  CHECK(t[0].t0 == Rational(0));
  CHECK(t[0].t1 == Rational(3));
  CHECK(t[0].marking == n.initial);
  CHECK_FALSE(t[0].transition);
}

TEST_CASE("only the head of the chain is enabled")
{
  const Net n = speak_then_pan();
  CHECK(check_net(n).empty());
  const auto ready = enabled(n, n.initial);
  REQUIRE(ready.size() == 1);
  CHECK(ready[0]->label == "A speaks");
  CHECK_THROWS_AS((void)fire(n, n.initial, n.transitions[1]), PetriError);
}

TEST_CASE("with-composition firing leaves subjects alone")
{
  const Net n = speak_then_pan();
  const Marking after = fire(n, n.initial, n.transitions[0]);
  CHECK(after.at("A") == n.initial.at("A"));
  CHECK(after.at("B") == n.initial.at("B"));
  CHECK(token_count(after, "c0") == 0);
  CHECK(token_count(after, "c1") == 1);
  CHECK(check_marking(n, after).empty());
}

TEST_CASE("timed trajectory")
{
  const Net n = speak_then_pan();
  const Trajectory t = simulate(n, Rational(1));
  REQUIRE(t.size() == 3);
  const std::vector<std::pair<Rational, Rational>> expected = {
    {Rational(0), Rational(2)}, {Rational(2), Rational(4)}, {Rational(4), Rational(5)}};
  for (std::size_t i = 0; i < t.size(); ++i) {
    CHECK(t[i].t0 == expected[i].first);
    CHECK(t[i].t1 == expected[i].second);
    CHECK(check_marking(n, t[i].marking).empty());
  }
  CHECK_FALSE(t[0].in_transition);
  CHECK(t[1].in_transition);
  CHECK(t[1].transition == std::optional<std::size_t>(1));
  const auto & a = std::get<SubjectToken>(t[2].marking.at("A").at(0));
  CHECK(a.size == Size::CU);
  CHECK(a.screen == Rational(1, 2));
  CHECK(a.profile == Profile::front);  // untouched attribute carried through
  CHECK(token_count(t[2].marking, "B") == 0);
}

TEST_CASE("exit empties the place, cross exchanges screens")
{
  Net n = base_net(2);
  Transition cross = step(0, "A crosses B", Rational(2));
  cross.changes_composition = true;
  cross.inputs.insert(cross.inputs.end(), {"A", "B"});
  cross.outputs.insert(cross.outputs.end(), {"A", "B"});
  cross.effect = {Rewrite{"A", SubjectPatch{std::nullopt, std::nullopt, Rational(2, 3), std::nullopt}},
                  Rewrite{"B", SubjectPatch{std::nullopt, std::nullopt, Rational(1, 3), std::nullopt}}};
  Transition exit = step(1, "B exits right", Rational(1));
  exit.changes_composition = true;
  exit.inputs.push_back("B");
  n.transitions = {cross, exit};
  CHECK(check_net(n).empty());

  const Marking crossed = fire(n, n.initial, n.transitions[0]);
  CHECK(std::get<SubjectToken>(crossed.at("A")[0]).screen == Rational(2, 3));
  CHECK(std::get<SubjectToken>(crossed.at("B")[0]).screen == Rational(1, 3));
  const Marking gone = fire(n, crossed, n.transitions[1]);
  CHECK(token_count(gone, "B") == 0);
  CHECK(token_count(gone, "A") == 1);
}

TEST_CASE("n transitions give n + 1 intervals")
{
  for (std::size_t chain = 0; chain <= 12; ++chain) {
    Net n = base_net(chain);
    Rational total(0);
    for (std::size_t k = 0; k < chain; ++k) {
      n.transitions.push_back(step(k, "step", Rational(static_cast<std::int64_t>(k % 3), 2)));
      total += n.transitions.back().duration;
    }
    const Trajectory t = simulate(n, Rational(1));
    REQUIRE(t.size() == chain + 1);
    for (std::size_t i = 1; i < t.size(); ++i) CHECK(t[i].t0 == t[i - 1].t1);
    CHECK(t.back().t1 == total + Rational(1));
  }
}

TEST_CASE("branching nets are reported")
{
  Net n = base_net(2);
  n.transitions = {step(0, "left", Rational(1)), step(0, "right", Rational(1))};
  n.transitions[1].id = "t0b";
  n.transitions[1].outputs = {"c2"};
  CHECK(enabled(n, n.initial).size() == 2);
  CHECK_THROWS_AS((void)simulate(n), PetriError);
}

TEST_CASE("multiset enabledness")
{
  Net n = base_net(1);
  Transition t = step(0, "needs two", Rational(1));
  t.inputs.push_back("c0");
  n.transitions = {t};
  CHECK(enabled(n, n.initial).empty());
  Marking m = n.initial;
  m["c0"].push_back(ControlToken{});
  CHECK(enabled(n, m).size() == 1);
}

TEST_CASE("cycles are cut off")
{
  Net n = base_net(1);
  Transition back = step(0, "loop", Rational(1));
  back.outputs = {"c0"};
  n.transitions = {back};
  CHECK_THROWS_AS((void)simulate(n, Rational(1), 50), PetriError);
}

TEST_CASE("structural checks")
{
  Net n = speak_then_pan();
  CHECK(check_net(n).empty());

  Net dup = n;
  dup.places.push_back({"A", PlaceKind::subject});
  CHECK_FALSE(check_net(dup).empty());

  Net dangling = n;
  dangling.transitions[0].outputs.push_back("nowhere");
  CHECK_FALSE(check_net(dangling).empty());

  Net negative = n;
  negative.transitions[0].duration = Rational(-1);
  CHECK_FALSE(check_net(negative).empty());

  Net sneaky = n;  // a with-composition transition may not touch subject attributes
  sneaky.transitions[0].effect = {Rewrite{"A", SubjectPatch{Size::CU, {}, {}, {}}}};
  CHECK_FALSE(check_net(sneaky).empty());

  Marking two_controls = n.initial;
  two_controls["c1"].push_back(ControlToken{});
  CHECK_FALSE(check_marking(n, two_controls).empty());
  Marking doubled = n.initial;
  doubled["A"].push_back(token(Rational(1, 2)));
  CHECK_FALSE(check_marking(n, doubled).empty());
}

TEST_CASE("json export")
{
  const Net n = speak_then_pan();
  const auto j = to_json(n);
  CHECK(j.at("psl_schema") == 1);
  CHECK(j.at("places").size() == n.places.size());
  CHECK(j.at("transitions").size() == 2);
  CHECK(j.at("transitions").at(1).at("duration") == "2");
  const auto traj = to_json(simulate(n));
  CHECK(traj.at("psl_schema") == 1);
  CHECK(traj.at("intervals").size() == 3);
}
