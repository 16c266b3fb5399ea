#include <doctest.h>

#include "psl/json_io.hpp"
#include "support.hpp"

using namespace psl;
using psl::test::parse_ok;

TEST_CASE("storyboards carry the schema version")
{
  const Json j = to_json(parse_ok("MS on A."));
  CHECK(j.at("psl_schema") == 1);
  CHECK(j.at("shots").size() == 1);
  CHECK(j.at("joins").empty());
}

TEST_CASE("subject fields")
{
  const Json j = to_json(psl::test::composition_ok("MS on A 3/4 back left screen far left and B at 2/4"));
  const Json & a = j.at("planes").at(0).at("subjects").at(0);
  CHECK(a.at("name") == "A");
  CHECK(a.at("profile") == "three-quarter-back-left");
  CHECK(a.at("screen").at("anchor") == "far-left");
  const Json & b = j.at("planes").at(0).at("subjects").at(1);
  CHECK(b.at("screen").at("fraction") == "1/2");
  CHECK(b.at("profile").is_null());
  CHECK(j.at("planes").at(0).at("size") == "MS");
}

TEST_CASE("events name their kind")
{
  const Storyboard sb = parse_ok("MS on A and B, pan with A, A crosses B, B reacts, A exits left.");
  const Json events = to_json(sb).at("shots").at(0).at("events");
  CHECK(events.at(0).at("kind") == "pan_with");
  CHECK(events.at(0).at("subject").at("name") == "A");
  CHECK(events.at(1).at("kind") == "cross");
  CHECK(events.at(1).at("actor") == "A");
  CHECK(events.at(1).at("other") == "B");
  CHECK(events.at(2).at("to").is_null());
  CHECK(events.at(3).at("to") == "left");
}

TEST_CASE("the corpus round-trips through JSON")
{
  for (const auto & path : psl::test::corpus_files()) {
    CAPTURE(path.string());
    const Storyboard sb = parse_ok(psl::test::read_file(path));
    const Json j = to_json(sb);
    CHECK(storyboard_from_json(j) == sb);
    CHECK(storyboard_from_json(Json::parse(j.dump())) == sb);
  }
}

TEST_CASE("malformed documents are rejected")
{
  Json j = to_json(parse_ok("MS on A. Cut to MS on A."));
  Json no_joins = j;
  no_joins["joins"] = Json::array();
  CHECK_THROWS_AS((void)storyboard_from_json(no_joins), JsonSchemaError);
  Json bad_size = j;
  bad_size["shots"][0]["initial"]["planes"][0]["size"] = "XL";
  CHECK_THROWS_AS((void)storyboard_from_json(bad_size), JsonSchemaError);
  Json bad_name = j;
  bad_name["shots"][0]["initial"]["planes"][0]["subjects"][0]["name"] = "two words";
  CHECK_THROWS_AS((void)storyboard_from_json(bad_name), JsonSchemaError);
  Json bad_fraction = j;
  bad_fraction["shots"][0]["initial"]["planes"][0]["subjects"][0]["screen"] = {{"fraction", "3/2"}};
  CHECK_THROWS_AS((void)storyboard_from_json(bad_fraction), JsonSchemaError);
  Json future = j;
  future["psl_schema"] = 2;
  CHECK_THROWS_AS((void)storyboard_from_json(future), JsonSchemaError);
  CHECK_THROWS_AS((void)storyboard_from_json(Json::array()), JsonSchemaError);
}

TEST_CASE("diagnostics serialize as one object each")
{
  const Diagnostic d{Severity::error, "E101", Span{3, 7}, "'B' is not on screen"};
  const Json j = to_json(d);
  CHECK(j.at("code") == "E101");
  CHECK(j.at("severity") == "error");
  CHECK(j.at("span") == Json::array({3, 7}));
  CHECK(j.at("message") == "'B' is not on screen");
  CHECK(j.at("psl_schema") == 1);
  CHECK(j.dump().find('\n') == std::string::npos);
}
