#include "barq/checks.hpp"
#include "barq/parallel.hpp"

#include <doctest.h>

using namespace barq;

TEST_SUITE("parallel") {
  TEST_CASE("exact sums agree between the reference and the parallel kernel") {
    const auto ints = [](std::size_t i) { return Rat(static_cast<long>(i)); };
    CHECK(par::sum_serial(1000, ints) == Rat(499500));
    CHECK(par::sum_parallel(1000, ints) == Rat(499500));

    const auto harmonic = [](std::size_t i) { return Rat(1, static_cast<long>(i + 1)); };
    CHECK(par::sum_serial(200, harmonic) == par::sum_parallel(200, harmonic));
    CHECK(par::sum(0, ints) == Rat(0));
  }

  TEST_CASE("max kernel") {
    const auto f = [](std::size_t i) { return Rat(static_cast<long>((i * 7) % 50)); };
    CHECK(par::max_serial(100, f) == Rat(49));
    CHECK(par::max_parallel(100, f) == par::max_serial(100, f));
    CHECK(par::max(0, f) == Rat(0));
  }

  TEST_CASE("first failure reports the minimal index") {
    const auto not_three_mod_seven = [](std::size_t i) { return i % 7 != 3; };
    CHECK(par::first_failure_serial(100, not_three_mod_seven) == 3);
    CHECK(par::first_failure_parallel(100, not_three_mod_seven) == 3);

    const auto two_failures = [](std::size_t i) { return i != 41 && i != 77; };
    CHECK(par::first_failure_parallel(100, two_failures) == 41);

    const auto fails_at_zero = [](std::size_t i) { return i != 0; };
    CHECK(par::first_failure_parallel(100, fails_at_zero) == 0);

    const auto all_good = [](std::size_t) { return true; };
    CHECK_FALSE(par::first_failure_serial(100, all_good).has_value());
    CHECK_FALSE(par::first_failure_parallel(100, all_good).has_value());
    CHECK_FALSE(par::first_failure_parallel(0, all_good).has_value());
  }

  TEST_CASE("results do not depend on the worker count") {
    CHECK(par::max_threads() >= 1);
    const auto ints = [](std::size_t i) { return Rat(static_cast<long>(i)); };
    const auto spiky = [](std::size_t i) { return i % 13 != 11; };

    par::set_threads(1);
    const Rat sum1 = par::sum_parallel(5000, ints);
    const auto fail1 = par::first_failure_parallel(5000, spiky);
    par::set_threads(4);
    const Rat sum4 = par::sum_parallel(5000, ints);
    const auto fail4 = par::first_failure_parallel(5000, spiky);
    par::set_threads(par::max_threads());

    CHECK(sum1 == sum4);
    CHECK(fail1 == fail4);
    CHECK(fail1 == 11);
  }

  TEST_CASE("failing exhaustive scans report identical counterexamples at any worker count") {
    const Group c4 = Group::cyclic(4);
    Rng rng(89);
    const Cochain w = random_table_cochain(rng, c4, 2);

    par::set_threads(1);
    const CheckResult r1 = check_osc_mechanism(c4, w);
    par::set_threads(4);
    const CheckResult r4 = check_osc_mechanism(c4, w);
    par::set_threads(par::max_threads());

    REQUIRE_FALSE(r1.pass);
    CHECK(r1.counterexample == r4.counterexample);
    CHECK(r1.detail == r4.detail);
  }
}
