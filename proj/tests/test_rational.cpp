#include <doctest.h>

#include <limits>
#include <stdexcept>

#include "cycone/rational.hpp"

using cycone::Rational;

TEST_SUITE("rational") {
  TEST_CASE("canonical form") {
    const Rational r(6, -4);
    CHECK(r.str() == "-3/2");
    CHECK(r.is_canonical());
    CHECK(Rational(0, 5).str() == "0/1");
    CHECK(Rational(567).str() == "567/1");
    CHECK(Rational(567).pretty() == "567");
  }

  TEST_CASE("arithmetic matches hand-reduced fractions") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK(-Rational(2, 3) == Rational(-2, 3));
  }

  TEST_CASE("field identities on a small grid") {
    for (int p = -6; p <= 6; ++p)
      for (int q = 1; q <= 6; ++q)
        for (int r = -6; r <= 6; ++r)
          for (int s = 1; s <= 6; ++s) {
            const Rational x(p, q), y(r, s);
            CHECK(((x + y) - y) == x);
            CHECK((x * y) == Rational(p * r, q * s));
            CHECK((x + y).is_canonical());
            if (!y.is_zero()) CHECK(((x / y) * y) == x);
            CHECK(((x < y) == (p * s < r * q)));
          }
  }

  TEST_CASE("no overflow beyond 64 bits") {
    Rational big(std::numeric_limits<std::int64_t>::max());
    const Rational sq = big * big;
    CHECK(sq / big == big);
    CHECK_THROWS_AS((void)sq.to_int(), std::domain_error);
  }

  TEST_CASE("division by zero throws") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  }

  TEST_CASE("parse") {
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse(Rational(-9, 2).str()) == Rational(-9, 2));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
  }

  TEST_CASE("to_int only for integers") {
    CHECK(Rational(12, 4).to_int() == 3);
    CHECK_THROWS_AS((void)Rational(1, 2).to_int(), std::domain_error);
  }
}
