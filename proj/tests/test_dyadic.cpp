#include "barq/dyadic.hpp"

#include <doctest.h>

#include <stdexcept>

using barq::Dyadic;
using barq::Int;
using barq::Rat;

TEST_SUITE("dyadic") {
  TEST_CASE("canonical form strips shared powers of two") {
    CHECK(Dyadic(Int(6), 1) == Dyadic(3));
    CHECK(Dyadic(Int(4), 3) == Dyadic(Int(1), 1));
    CHECK(Dyadic(Int(4), 3).str() == "1/2^1");
    CHECK(Dyadic(Int(0), 5).str() == "0/2^0");
    CHECK(Dyadic(Int(-12), 2) == Dyadic(-3));
    // k > 0 implies odd mantissa; integers keep k = 0.
    CHECK(Dyadic(Int(5), 4).exponent() == 4);
    CHECK(Dyadic(Int(10), 1) == Dyadic(5));
  }

  TEST_CASE("construction rejects negative exponents") {
    CHECK_THROWS_AS(Dyadic(Int(1), -1), std::invalid_argument);
  }

  TEST_CASE("parse and str round-trip") {
    for (const char* s : {"0/2^0", "1/2^1", "-3/2^3", "7/2^0", "12345/2^13"}) {
      CHECK(Dyadic::parse(s).str() == s);
    }
    CHECK(Dyadic::parse("7") == Dyadic(7));
    CHECK(Dyadic::parse("-2") == Dyadic(-2));
    CHECK(Dyadic::parse("4/2^1") == Dyadic(2));  // non-canonical input is normalized
    CHECK_THROWS_AS(Dyadic::parse("1/3^2"), std::invalid_argument);
    CHECK_THROWS_AS(Dyadic::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Dyadic::parse("1/2^"), std::invalid_argument);
    CHECK_THROWS_AS(Dyadic::parse("1/2^-1"), std::invalid_argument);
  }

  TEST_CASE("arithmetic is exact and canonical") {
    const Dyadic half(Int(1), 1);
    CHECK(half + half == Dyadic(1));
    CHECK((half + half).str() == "1/2^0");
    CHECK(Dyadic(Int(3), 3) - Dyadic(Int(1), 3) == Dyadic(Int(1), 2));
    CHECK(Dyadic(Int(3), 3) * Dyadic(8) == Dyadic(3));
    CHECK(-Dyadic(Int(3), 1) == Dyadic(Int(-3), 1));
    CHECK(Dyadic(Int(1), 4) + Dyadic(Int(3), 2) == Dyadic(Int(13), 4));
  }

  TEST_CASE("mul_pow2 handles both signs and re-canonicalizes") {
    // Halving an even integer must fold back into the mantissa.
    CHECK(Dyadic(2).mul_pow2(-1) == Dyadic(1));
    CHECK(Dyadic(2).mul_pow2(-1).str() == "1/2^0");
    CHECK(Dyadic(Int(3), 2).mul_pow2(2) == Dyadic(3));
    CHECK(Dyadic(Int(5), 1).mul_pow2(-3) == Dyadic(Int(5), 4));
    CHECK(Dyadic(Int(5), 1).mul_pow2(0) == Dyadic(Int(5), 1));
    CHECK(Dyadic(Int(1), 3).mul_pow2(5) == Dyadic(4));
    CHECK(Dyadic(0).mul_pow2(-7) == Dyadic(0));
  }

  TEST_CASE("ordering") {
    CHECK(Dyadic(Int(1), 2) < Dyadic(Int(3), 3));
    CHECK(Dyadic(Int(3), 3) < Dyadic(Int(1), 1));
    CHECK(Dyadic(Int(-1), 1) < Dyadic(0));
    CHECK(Dyadic(Int(5), 3) <= Dyadic(Int(5), 3));
    CHECK(Dyadic(1) > Dyadic(Int(7), 3));
  }

  TEST_CASE("conversion to rationals") {
    CHECK(Dyadic(Int(3), 3).to_rat() == Rat(3, 8));
    CHECK(Dyadic(Int(-1), 1).to_rat() == Rat(-1, 2));
    CHECK(Dyadic(9).to_rat() == Rat(9));
  }

  TEST_CASE("equal values hash equally") {
    CHECK(Dyadic(Int(4), 1).hash() == Dyadic(2).hash());
    CHECK(Dyadic(Int(6), 3).hash() == Dyadic(Int(3), 2).hash());
  }
}
