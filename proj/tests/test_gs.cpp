#include "barq/gs.hpp"
#include "barq/rng.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace barq;

TEST_SUITE("gs") {
  TEST_CASE("built-in pair evaluates to +1 / -1") {
    CHECK(gs_evaluate(builtin_f(), builtin_g()) == 1);
    CHECK(gs_evaluate(builtin_g(), builtin_f()) == -1);
  }

  TEST_CASE("the single contributing breakpoint is x = 1/2") {
    const auto cs = gs_contributions(builtin_f(), builtin_g());
    int nonzero = 0;
    for (const auto& c : cs) {
      if (c.det != 0) {
        ++nonzero;
        CHECK(c.x == Dyadic(1, 1));
        CHECK(c.det == 1);
      }
    }
    CHECK(nonzero == 1);

    const auto cs_rev = gs_contributions(builtin_g(), builtin_f());
    nonzero = 0;
    for (const auto& c : cs_rev) {
      if (c.det != 0) {
        ++nonzero;
        CHECK(c.x == Dyadic(1, 1));
        CHECK(c.det == -1);
      }
    }
    CHECK(nonzero == 1);
  }

  TEST_CASE("identity in either slot gives zero") {
    CHECK(gs_evaluate(builtin_f(), PLMap::identity()) == 0);
    CHECK(gs_evaluate(PLMap::identity(), builtin_g()) == 0);
    CHECK(gs_evaluate(PLMap::identity(), PLMap::identity()) == 0);
  }

  TEST_CASE("enlarging the summation set never changes the value") {
    const std::vector<Dyadic> extra = {Dyadic(1, 2), Dyadic(5, 4), Dyadic(7, 3)};
    CHECK(gs_evaluate_over(builtin_f(), builtin_g(), extra) == 1);
    CHECK(gs_evaluate_over(builtin_g(), builtin_f(), extra) == -1);
    Rng rng(101);
    for (int i = 0; i < 10; ++i) {
      const PLMap a = random_fprime_word(rng, 5);
      const PLMap b = random_fprime_word(rng, 5);
      CHECK(gs_evaluate_over(a, b, extra) == gs_evaluate(a, b));
    }
    CHECK_THROWS_AS(gs_evaluate_over(builtin_f(), builtin_g(), {Dyadic(0)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(gs_evaluate_over(builtin_f(), builtin_g(), {Dyadic(1)}),
                    std::invalid_argument);
  }

  TEST_CASE("arguments outside the derived subgroup are rejected") {
    // Slopes 1/2, 2, 1: a valid element of F whose germ at 0 is not trivial.
    const PLMap in_f_only = PLMap::from_points({{Dyadic(0), Dyadic(0)},
                                                {Dyadic(1, 1), Dyadic(1, 2)},
                                                {Dyadic(3, 2), Dyadic(3, 2)},
                                                {Dyadic(1), Dyadic(1)}});
    REQUIRE(is_in_f(in_f_only));
    REQUIRE_FALSE(is_in_f_prime(in_f_only));
    CHECK_THROWS_WITH_AS(gs_evaluate(in_f_only, builtin_g()), doctest::Contains("not in F'"),
                         std::invalid_argument);
    CHECK_THROWS_AS(gs_evaluate(builtin_f(), in_f_only), std::invalid_argument);
  }

  TEST_CASE("cocycle identity on random words") {
    const Group fp = Group::fprime();
    const Cochain alpha = gs_cochain();
    const Cochain dalpha = codifferential(alpha, fp);
    Rng rng(77);
    for (int i = 0; i < 50; ++i) {
      const Tuple t = {Element(random_fprime_word(rng, 6)), Element(random_fprime_word(rng, 6)),
                       Element(random_fprime_word(rng, 6))};
      CHECK(dalpha(t) == Rat(0));
    }
  }

  TEST_CASE("cochain values are integers") {
    const Cochain alpha = gs_cochain();
    Rng rng(79);
    for (int i = 0; i < 20; ++i) {
      const Rat v = alpha({Element(random_fprime_word(rng, 5)), Element(random_fprime_word(rng, 5))});
      CHECK(v.get_den() == 1);
    }
  }

  TEST_CASE("pairing against the degree-2 cycle") {
    const Cochain w = pullback(gs_cochain(), psi2());
    CHECK(pair_chain(w, zeta_cycle(2), par::Mode::serial) == Rat(2));
    CHECK(pair_chain(w, zeta_cycle(2), par::Mode::parallel) == Rat(2));
  }

  TEST_CASE("pairing the cup square against the degree-4 cycle") {
    const Cochain alpha = gs_cochain();
    const Cochain w = pullback(cup(alpha, alpha), psi4()).memoized();
    CHECK(pair_chain(w, zeta_cycle(4), par::Mode::serial) == Rat(8));
    CHECK(pair_chain(w, zeta_cycle(4), par::Mode::parallel) == Rat(8));
  }

  TEST_CASE("degree-8 pairing matches the recorded exact value") {
    CHECK(zeta8_pairing() == 384);
  }

  TEST_CASE("degree-8 pairing is invariant under reordering the generator images") {
    const std::array<PLMap, 4> w = psi4_images();
    const std::array<PLMap, 4> swapped = {w[1], w[0], w[2], w[3]};
    CHECK(zeta8_pairing(swapped) == 384);
    const std::array<PLMap, 4> rotated = {w[3], w[0], w[1], w[2]};
    CHECK(zeta8_pairing(rotated) == 384);
  }

  TEST_CASE("half-interval embeddings pairwise commute") {
    const std::array<PLMap, 4> w = psi4_images();
    for (const PLMap& a : w)
      for (const PLMap& b : w) CHECK(compose(a, b) == compose(b, a));
  }

  TEST_CASE("pairing homomorphism applies exponent vectors") {
    const Homomorphism p = psi2();
    CHECK(std::get<PLMap>(p.apply(Element(ZVec{1, 0}))) == builtin_f());
    CHECK(std::get<PLMap>(p.apply(Element(ZVec{0, 1}))) == builtin_g());
    const PLMap expect = compose(pl_pow(builtin_f(), 2), invert(builtin_g()));
    CHECK(std::get<PLMap>(p.apply(Element(ZVec{2, -1}))) == expect);
  }
}
