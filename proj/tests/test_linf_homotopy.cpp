#include "barq/checks.hpp"
#include "barq/homotopy.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace barq;

namespace {

LinfElement random_linf(Rng& rng, const Group& group) {
  return LinfElement(group, rng.table(group.order(), 9));
}

}  // namespace

TEST_SUITE("linf_homotopy") {
  TEST_CASE("module action (h.F)(g) = F(gh), a left action") {
    const Group s3 = Group::symmetric(3);
    Rng rng(41);
    const LinfElement F = random_linf(rng, s3);
    for (const Element& h : s3.elements()) {
      const LinfElement hF = F.acted_by(h);
      for (const Element& g : s3.elements()) {
        CHECK(hF.at(g) == F.at(s3.multiply(g, h)));
      }
      for (const Element& h2 : s3.elements()) {
        CHECK(F.acted_by(h2).acted_by(h) == F.acted_by(s3.multiply(h, h2)));
      }
    }
    CHECK(F.acted_by(s3.identity()) == F);
  }

  TEST_CASE("normalization kills the value at the identity") {
    const Group c4 = Group::cyclic(4);
    Rng rng(43);
    const LinfElement F = random_linf(rng, c4);
    const LinfElement N = F.normalized_at_identity();
    CHECK(N.at_identity() == Rat(0));
    CHECK((F - N).is_constant());
    CHECK(LinfElement::constant(c4, Rat(7)).normalized_at_identity() ==
          LinfElement::constant(c4, Rat(0)));
  }

  TEST_CASE("oscillation is max minus min") {
    const Group c4 = Group::cyclic(4);
    const LinfElement F(c4, {Rat(1), Rat(-3), Rat(2), Rat(1, 2)});
    CHECK(F.oscillation() == Rat(5));
    CHECK(LinfElement::constant(c4, Rat(12)).oscillation() == Rat(0));
    CHECK_FALSE(F.is_constant());
    CHECK(LinfElement::constant(c4, Rat(12)).is_constant());
  }

  TEST_CASE("module codifferential in degree 0 is the action defect") {
    const Group s3 = Group::symmetric(3);
    Rng rng(47);
    const LinfElement F = random_linf(rng, s3);
    const ModuleCochain eta(s3, 0, ModuleCoeff::linf, [F](const Tuple&) { return F; });
    const ModuleCochain deta = module_codifferential(eta);
    for (const Element& g : s3.elements()) {
      CHECK(deta({g}) == F.acted_by(g) - F);
    }
  }

  TEST_CASE("module codifferential squares to zero") {
    for (const Group& group : {Group::cyclic(4), Group::symmetric(3)}) {
      Rng rng(53);
      // A random degree-1 module cochain, tabulated so evaluation is pure.
      std::vector<LinfElement> table;
      for (std::size_t i = 0; i < group.order(); ++i) table.push_back(random_linf(rng, group));
      const ModuleCochain eta(group, 1, ModuleCoeff::linf, [&group, table](const Tuple& t) {
        return table[group.index_of(t[0])];
      });
      const ModuleCochain ddeta = module_codifferential(module_codifferential(eta));
      const LinfElement zero = LinfElement::constant(group, Rat(0));
      for (std::size_t i = 0; i < tuple_space_size(group, 3); ++i) {
        CHECK(ddeta(tuple_from_index(group, 3, i)) == zero);
      }
    }
  }

  TEST_CASE("contracting-operator identities on random cochains") {
    for (const char* name : {"c2", "c3", "c5", "s3"}) {
      const Group group = Group::parse(name);
      for (int degree = 1; degree <= 3; ++degree) {
        Rng rng(1000 + degree);
        const Cochain w = random_table_cochain(rng, group, degree);
        CHECK(check_averaging_homotopy(group, w).pass);
        CHECK(check_lambda0_homotopy(group, w).pass);
        CHECK(check_lambda_anticommutes(group, w).pass);
        const Cochain w1c = random_one_constant_cochain(rng, group, degree);
        CHECK(check_one_constant_homotopy(group, w1c).pass);
        const Cochain z = random_cocycle(rng, group, degree);
        CHECK(check_bockstein_comparison(group, z).pass);
        CHECK(check_comparison_vanishing(group, z).pass);
      }
    }
  }

  TEST_CASE("one-constant machinery rejects and reports dependence on the first slot") {
    const Group c2 = Group::cyclic(2);
    const Cochain w = Cochain::from_table(c2, 1, {Rat(0), Rat(1)});
    const auto witness = find_non_one_constant_witness(w, c2);
    REQUIRE(witness.has_value());
    CHECK_THROWS_AS(one_constant_contraction(w, c2), std::invalid_argument);

    Rng rng(59);
    const Cochain ok = random_one_constant_cochain(rng, c2, 2);
    CHECK_FALSE(find_non_one_constant_witness(ok, c2).has_value());
    // The codifferential preserves 1-constancy (the subcomplex is closed).
    CHECK_FALSE(find_non_one_constant_witness(codifferential(ok, c2), c2).has_value());
  }

  TEST_CASE("one-constant contraction evaluates at stuffed identities") {
    const Group s3 = Group::symmetric(3);
    Rng rng(61);
    const Cochain w1 = random_one_constant_cochain(rng, s3, 1);
    const Cochain hw1 = one_constant_contraction(w1, s3);
    CHECK(hw1.degree() == 0);
    CHECK(hw1({}) == w1({s3.identity()}));
    const Cochain w2 = random_one_constant_cochain(rng, s3, 2);
    const Cochain hw2 = one_constant_contraction(w2, s3);
    for (const Element& x : s3.elements()) {
      CHECK(hw2({x}) == w2({s3.identity(), s3.identity()}));
    }
  }

  TEST_CASE("connecting map rejects non-cocycles") {
    const Group c2 = Group::cyclic(2);
    const Cochain w = Cochain::from_table(c2, 1, {Rat(1), Rat(1)});
    // d(w)(1,1) = w(1) - w(0) + w(1) = 1, so w is not a cocycle.
    CHECK_THROWS_AS(bockstein_of_lambda(w, c2), std::invalid_argument);
  }

  TEST_CASE("connecting map recovers the cocycle from the canonical lift") {
    const Group s3 = Group::symmetric(3);
    Rng rng(67);
    const Cochain z = random_cocycle(rng, s3, 2);
    const Cochain back = bockstein_of_lambda(z, s3);
    for (std::size_t i = 0; i < tuple_space_size(s3, 2); ++i) {
      const Tuple t = tuple_from_index(s3, 2, i);
      CHECK(back(t) == z(t));
    }
  }

  TEST_CASE("non-canonical lifts move the output by the shift's coboundary") {
    for (const char* name : {"c3", "s3"}) {
      const Group group = Group::parse(name);
      for (int degree = 1; degree <= 2; ++degree) {
        Rng rng(71 + degree);
        const Cochain z = random_cocycle(rng, group, degree);
        const Cochain shift = random_table_cochain(rng, group, degree - 1);
        const Cochain shifted = bockstein_with_lift_shift(z, group, shift);
        const Cochain ds = codifferential(shift, group);
        for (std::size_t i = 0; i < tuple_space_size(group, degree); ++i) {
          const Tuple t = tuple_from_index(group, degree, i);
          CHECK(shifted(t) == z(t) + ds(t));
        }
      }
    }
  }

  TEST_CASE("uniform mean splits the constants invariantly") {
    for (const char* name : {"c4", "s3"}) {
      const Group group = Group::parse(name);
      Rng rng(73);
      const SplittingReport r = splitting_check(Mean(group), rng, 25);
      CHECK(r.invariant);
      CHECK(r.splits_constants);
      CHECK(r.counterexample.empty());
    }
  }
}
