// SPDX-License-Identifier: Apache-2.0
#include "octaq/radical.hpp"
#include "octaq/rational.hpp"

#include <doctest.h>

#include <cmath>

using namespace octaq;

TEST_CASE("parse_rational reads integers, fractions and decimals exactly") {
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("-3/6") == frac(-1, 2));
  CHECK(parse_rational("0.25") == frac(1, 4));
  CHECK(parse_rational("-.5") == frac(-1, 2));
  CHECK(parse_rational("1e-3") == frac(1, 1000));
  CHECK(parse_rational("2.5E2") == 250);
  CHECK(parse_rational(" 0.1 ") == frac(1, 10));
  // 0.1 is not the binary float
  CHECK(parse_rational("0.1") != Rational(0.1));
}

TEST_CASE("parse_rational rejects malformed input") {
  for (const char* bad : {"", "abc", "1/0", "1//2", "1.2.3", "--1", "1e", "/3", "0x10", "1,5"})
    CHECK_THROWS(parse_rational(bad));
}

TEST_CASE("to_string and sign") {
  CHECK(to_string(frac(6, 4)) == "3/2");
  CHECK(to_string(Rational(-2)) == "-2");
  CHECK(sign(frac(-1, 3)) == -1);
  CHECK(sign(Rational(0)) == 0);
}

TEST_CASE("exact square roots") {
  CHECK(is_square(frac(9, 4)));
  CHECK_FALSE(is_square(Rational(2)));
  CHECK_FALSE(is_square(Rational(-4)));
  CHECK(exact_sqrt(frac(9, 4)) == frac(3, 2));
}

TEST_CASE("Surd pulls out square factors") {
  Surd s = Surd::sqrt_of(frac(1, 8));  // sqrt(2)/4
  CHECK(s.multiplier == frac(1, 4));
  CHECK(s.radicand == 2);
  CHECK(s.value() == doctest::Approx(std::sqrt(0.125)));
  CHECK(Surd::sqrt_of(Rational(49)).str() == "7");
  CHECK(Surd::sqrt_of(Rational(12)).str() == "2*sqrt(3)");
  CHECK(Surd::sqrt_of(Rational(0)).str() == "0");
  CHECK_THROWS(Surd::sqrt_of(Rational(-1)));
}

TEST_CASE("NestedRadical value") {
  NestedRadical r{frac(1, 2), frac(1, 2), Rational(5)};
  CHECK(r.value() == doctest::Approx(std::sqrt((1 + std::sqrt(5.0)) / 2)));
}
