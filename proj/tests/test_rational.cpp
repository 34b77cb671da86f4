#include <doctest.h>

#include "posslog/degree.hpp"

using namespace posslog;

TEST_CASE("rational parsing is exact") {
  CHECK(*Rational::parse("0.76") == Rational(19, 25));
  CHECK(*Rational::parse(".5") == Rational(1, 2));
  CHECK(*Rational::parse("1") == Rational(1));
  CHECK(*Rational::parse("3/4") == Rational(3, 4));
  CHECK(*Rational::parse("-0.25") == Rational(-1, 4));
  CHECK(!Rational::parse(""));
  CHECK(!Rational::parse("1.2.3"));
  CHECK(!Rational::parse("1/0"));
  CHECK(!Rational::parse("abc"));
}

TEST_CASE("rational arithmetic and ordering") {
  Rational a(2, 5), b(3, 5);
  CHECK(a + b == Rational(1));
  CHECK(b - a == Rational(1, 5));
  CHECK(a * b == Rational(6, 25));
  CHECK(a / b == Rational(2, 3));
  CHECK(a < b);
  CHECK(Rational(1, 3) < Rational(34, 100));
  CHECK_THROWS_AS(a / Rational(0), PosslogError);
}

TEST_CASE("decimal rendering") {
  CHECK(*Rational(19, 25).to_decimal_string() == "0.76");
  CHECK(*Rational(6, 25).to_decimal_string() == "0.24");
  CHECK(*Rational(1, 2).to_decimal_string() == "0.5");
  CHECK(*Rational(3).to_decimal_string() == "3");
  CHECK(!Rational(1, 3).to_decimal_string());
  CHECK(Rational(23, 25).to_fraction_string() == "23/25");
}

TEST_CASE("degree bounds and complement") {
  CHECK(Degree::parse("0.76"));
  CHECK(!Degree::parse("1.5"));
  CHECK(!Degree::parse("-0.1"));
  Degree d = *Degree::parse("0.4");
  CHECK(d.complement() == *Degree::parse("0.6"));
  CHECK(Degree::one().complement() == Degree::zero());
  CHECK_THROWS_AS(Degree(Rational(5, 4)), PosslogError);
  CHECK(d.to_compact_string() == "0.4");
  CHECK(Degree(1, 3).to_compact_string() == "1/3");
}
