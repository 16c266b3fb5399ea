#include <doctest.h>

#include "psl/format.hpp"
#include "support.hpp"

using namespace psl;
using psl::test::parse_ok;

TEST_CASE("a single subject")
{
  Storyboard sb;
  Shot shot;
  shot.initial.planes.push_back(FlatComposition{Size::MS, {SubjectSpec{"Albert", {}, {}, {}}}, {}});
  sb.shots.push_back(shot);
  CHECK(format(sb) == "MS on Albert.");
}

TEST_CASE("case and spacing are normalized; names are kept as written")
{
  CHECK(format(parse_ok("ms   ON albert .")) == "MS on albert.");
  CHECK(format(parse_ok("Medium Close-Up on Anna 3/4 BACK left SCREEN far RIGHT,lock ,Anna  SPEAKS.")) ==
        "MCU on Anna 3/4 back left screen far right, lock, Anna speaks.");
}

TEST_CASE("fractions are printed reduced")
{
  CHECK(format(parse_ok("MS on A at 2/4.")) == "MS on A at 1/2.");
}

TEST_CASE("joins open the following line")
{
  CHECK(format(parse_ok("MS on A. dissolve to CU on A. cut to LS on A and B.")) ==
        "MS on A.\nDissolve to CU on A.\nCut to LS on A and B.");
}

TEST_CASE("every event form prints back")
{
  const std::string canonical =
    "MS on A and B, lock, pan with A, dolly with B left, crane with A screen left, pan to CU on A, "
    "dolly to MS on A and B, crane to LS on A and B, continue to MS on A at 1/4 and B, "
    "C enters from left to MS on A and B and C, C exits right, A crosses B, B moves to CU on B, MS on A, "
    "A speaks, B reacts, B reacts to A, A uses rope, A touches chest.";
  CHECK(format(parse_ok(canonical)) == canonical);
}

TEST_CASE("format is a fixed point through the parser on the corpus")
{
  for (const auto & path : psl::test::corpus_files()) {
    CAPTURE(path.string());
    const Storyboard sb = parse_ok(psl::test::read_file(path));
    const std::string once = format(sb);
    const Storyboard again = parse_ok(once);
    CHECK(again == sb);
    CHECK(format(again) == once);
  }
}
