#include <doctest.h>

#include <limits>
#include <stdexcept>

#include "psl/rational.hpp"

using psl::Rational;

TEST_CASE("rationals are stored in lowest terms with a positive denominator")
{
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(3, -6).den() == 2);
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, 7).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic is exact")
{
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
  CHECK_THROWS(Rational(1) / Rational(0));
  Rational t;
  for (int i = 0; i < 3; ++i) t += Rational(1, 3);
  CHECK(t == Rational(1));
}

TEST_CASE("ordering compares values, not representations")
{
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(2, 6) <= Rational(1, 3));
  const auto big = std::numeric_limits<std::int64_t>::max();
  CHECK(Rational(big - 1, big) < Rational(big, big - 1));
}

TEST_CASE("text form")
{
  CHECK(Rational(3).str() == "3");
  CHECK(Rational(2, 6).str() == "1/3");
  CHECK(Rational(-5, 10).str() == "-1/2");
  CHECK(Rational::parse("4/8") == Rational(1, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_FALSE(Rational::parse("1/0"));
  CHECK_FALSE(Rational::parse("1/"));
  CHECK_FALSE(Rational::parse("a/b"));
  CHECK_FALSE(Rational::parse(""));
  CHECK(Rational(1, 3).to_double() == doctest::Approx(0.3333333));
}
