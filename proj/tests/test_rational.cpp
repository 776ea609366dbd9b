#include <doctest.h>

#include "ppc/errors.hpp"
#include "ppc/rational.hpp"

using namespace ppc;

TEST_CASE("parse_rational forms") {
  CHECK(parse_rational("1/19") == Rational(1, 19));
  CHECK(parse_rational("4/8") == Rational(1, 2));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("0.05") == Rational(1, 20));
  CHECK(parse_rational("0.0526315789") == Rational("526315789/10000000000"));
  CHECK(parse_rational("-1.5e-3") == Rational(-3, 2000));
  CHECK(parse_rational("2E2") == Rational(200));
}

TEST_CASE("parse_rational rejects junk") {
  for (const char* bad : {"", "1/0", "abc", "1/", "/2", "1.2.3", "1e", "0x10", "1/2/3"})
    CHECK_THROWS_AS(parse_rational(bad), ppc::invalid_argument);
}

TEST_CASE("fraction strings and directed doubles") {
  CHECK(to_fraction_string(Rational(2, 8)) == "1/4");
  CHECK(to_fraction_string(Rational(3)) == "3/1");
  const Rational third(1, 3);
  CHECK(double_below(third) < double_above(third));
  CHECK(from_double(double_below(third)) < third);
  CHECK(from_double(double_above(third)) > third);
  CHECK(double_below(Rational(1, 4)) == 0.25);
  CHECK(double_above(Rational(1, 4)) == 0.25);
  CHECK(from_double(0.1) != Rational(1, 10));
}

TEST_CASE("ExactProb range") {
  CHECK(ExactProb(Rational(0)).to_string() == "0/1");
  CHECK(ExactProb(Rational(1)).to_double() == 1.0);
  CHECK_THROWS_AS(ExactProb(Rational(-1, 5)), ppc::invalid_argument);
  CHECK_THROWS_AS(ExactProb(Rational(6, 5)), ppc::invalid_argument);
  CHECK(factorial(10) == 3628800);
}
