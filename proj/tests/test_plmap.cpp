#include "barq/plmap.hpp"

#include <doctest.h>

#include <stdexcept>
#include <vector>

using namespace barq;

namespace {
Dyadic dy(long m, long k) { return Dyadic(Int(m), k); }
PLMap::Point pt(long mx, long kx, long my, long ky) { return {dy(mx, kx), dy(my, ky)}; }
}  // namespace

TEST_SUITE("plmap") {
  TEST_CASE("built-in f: breakpoints and slopes") {
    const PLMap f = builtin_f();
    REQUIRE(f.points().size() == 5);
    CHECK(f.points()[0] == pt(0, 0, 0, 0));
    CHECK(f.points()[1] == pt(1, 3, 1, 3));
    CHECK(f.points()[2] == pt(3, 3, 1, 2));  // (3/8, 2/8)
    CHECK(f.points()[3] == pt(1, 1, 1, 1));  // (4/8, 4/8)
    CHECK(f.points()[4] == pt(1, 0, 1, 0));
    REQUIRE(f.segment_count() == 4);
    CHECK(f.slope_log2(0) == 0);
    CHECK(f.slope_log2(1) == -1);
    CHECK(f.slope_log2(2) == 1);
    CHECK(f.slope_log2(3) == 0);
    CHECK(is_in_f(f));
    CHECK(is_in_f_prime(f));
  }

  TEST_CASE("built-in g: breakpoints and slopes") {
    const PLMap g = builtin_g();
    REQUIRE(g.points().size() == 5);
    CHECK(g.points()[1] == pt(1, 1, 1, 1));
    CHECK(g.points()[2] == pt(5, 3, 3, 2));  // (5/8, 6/8)
    CHECK(g.points()[3] == pt(7, 3, 7, 3));
    REQUIRE(g.segment_count() == 4);
    CHECK(g.slope_log2(0) == 0);
    CHECK(g.slope_log2(1) == 1);
    CHECK(g.slope_log2(2) == -1);
    CHECK(g.slope_log2(3) == 0);
    CHECK(is_in_f_prime(g));
  }

  TEST_CASE("exact evaluation and preimage") {
    const PLMap f = builtin_f();
    CHECK(f(dy(1, 2)) == dy(3, 4));  // on the slope-1/2 segment
    CHECK(f(dy(3, 3)) == dy(1, 2));
    CHECK(f(dy(7, 4)) == dy(3, 3));  // on the slope-2 segment: y = 2x - 1/2
    CHECK(f(dy(3, 2)) == dy(3, 2));  // identity above 1/2
    CHECK(f(dy(0, 0)) == dy(0, 0));
    CHECK(f(dy(1, 0)) == dy(1, 0));
    CHECK(f.preimage(dy(3, 4)) == dy(1, 2));
    CHECK(f.preimage(f(dy(5, 4))) == dy(5, 4));
  }

  TEST_CASE("one-sided slopes with domain checks") {
    const PLMap f = builtin_f();
    CHECK(f.right_slope_log2(dy(0, 0)) == 0);
    CHECK(f.left_slope_log2(dy(1, 3)) == 0);
    CHECK(f.right_slope_log2(dy(1, 3)) == -1);
    CHECK(f.left_slope_log2(dy(1, 1)) == 1);
    CHECK(f.right_slope_log2(dy(1, 1)) == 0);
    CHECK_THROWS_AS(f.right_slope_log2(dy(1, 0)), std::invalid_argument);
    CHECK_THROWS_AS(f.left_slope_log2(dy(0, 0)), std::invalid_argument);
  }

  TEST_CASE("inverse swaps coordinates") {
    const PLMap f = builtin_f();
    const PLMap fi = invert(f);
    REQUIRE(fi.points().size() == 5);
    CHECK(fi.points()[1] == pt(1, 3, 1, 3));
    CHECK(fi.points()[2] == pt(1, 2, 3, 3));  // (2/8, 3/8)
    CHECK(fi.points()[3] == pt(1, 1, 1, 1));
    CHECK(compose(fi, f) == PLMap::identity());
    CHECK(compose(f, fi) == PLMap::identity());
    CHECK(invert(PLMap::identity()) == PLMap::identity());
  }

  TEST_CASE("composition is associative and respects identity") {
    const PLMap f = builtin_f();
    const PLMap g = builtin_g();
    CHECK(compose(f, PLMap::identity()) == f);
    CHECK(compose(PLMap::identity(), g) == g);
    CHECK(compose(compose(f, g), f) == compose(f, compose(g, f)));
    const PLMap fg = compose(f, g);
    for (const Dyadic& x : {dy(1, 3), dy(1, 2), dy(5, 3), dy(3, 2), dy(13, 4)}) {
      CHECK(fg(x) == f(g(x)));
    }
  }

  TEST_CASE("built-in pair commutes (disjoint supports)") {
    CHECK(compose(builtin_f(), builtin_g()) == compose(builtin_g(), builtin_f()));
  }

  TEST_CASE("powers via repeated squaring") {
    const PLMap f = builtin_f();
    CHECK(pl_pow(f, 0) == PLMap::identity());
    CHECK(pl_pow(f, 1) == f);
    CHECK(pl_pow(f, 2) == compose(f, f));
    CHECK(pl_pow(f, 5) == compose(f, compose(f, compose(f, compose(f, f)))));
    CHECK(pl_pow(f, -1) == invert(f));
    CHECK(pl_pow(f, -3) == invert(pl_pow(f, 3)));
    CHECK(compose(pl_pow(f, 4), pl_pow(f, -4)) == PLMap::identity());
  }

  TEST_CASE("star product squeezes into the half intervals") {
    const PLMap f = builtin_f();
    const PLMap g = builtin_g();
    const PLMap f1 = star_product(f, PLMap::identity());
    const std::vector<Dyadic> f1_bps = f1.interior_breakpoints();
    REQUIRE(f1_bps.size() == 3);
    CHECK(f1_bps[0] == dy(1, 4));
    CHECK(f1_bps[1] == dy(3, 4));
    CHECK(f1_bps[2] == dy(1, 2));  // 4/16
    const PLMap g2 = star_product(PLMap::identity(), g);
    const std::vector<Dyadic> g2_bps = g2.interior_breakpoints();
    REQUIRE(g2_bps.size() == 3);
    CHECK(g2_bps[0] == dy(3, 2));
    CHECK(g2_bps[1] == dy(13, 4));
    CHECK(g2_bps[2] == dy(15, 4));
    // Values: (a*b)(x) = a(2x)/2 below 1/2 and (b(2x-1)+1)/2 above.
    CHECK(f1(dy(1, 3)) == f(dy(1, 2)).mul_pow2(-1));
    CHECK(g2(dy(3, 2)) == (g(dy(1, 1)) + Dyadic(1)).mul_pow2(-1));
    CHECK(star_product(PLMap::identity(), PLMap::identity()) == PLMap::identity());
    CHECK(is_in_f_prime(f1));
    CHECK(is_in_f_prime(g2));
  }

  TEST_CASE("membership tests reject non-power-of-two slopes") {
    // (0,0) -> (1/2,1/4) -> (1,1): the second segment has slope 3/2.
    const std::vector<PLMap::Point> bad = {pt(0, 0, 0, 0), pt(1, 1, 1, 2), pt(1, 0, 1, 0)};
    CHECK_FALSE(is_in_f(bad));
    const auto why = f_membership_failure(bad);
    REQUIRE(why.has_value());
    CHECK(why->find("slope") != std::string::npos);
    CHECK_THROWS_AS(PLMap::from_points(bad), std::invalid_argument);
    // Correcting the right-hand side restores membership.
    const std::vector<PLMap::Point> good = {pt(0, 0, 0, 0), pt(1, 1, 1, 2), pt(3, 2, 3, 2),
                                            pt(1, 0, 1, 0)};
    CHECK(is_in_f(good));
    const PLMap m = PLMap::from_points(good);
    CHECK(is_in_f(m));
    CHECK_FALSE(is_in_f_prime(m));  // slope 1/2 at the left endpoint
  }

  TEST_CASE("from_points validates and canonicalizes") {
    CHECK_THROWS_AS(PLMap::from_points({pt(0, 0, 0, 0), pt(1, 0, 1, 1)}), std::invalid_argument);
    CHECK_THROWS_AS(PLMap::from_points({pt(0, 0, 0, 0), pt(1, 1, 3, 2), pt(1, 1, 1, 2),
                                        pt(1, 0, 1, 0)}),
                    std::invalid_argument);  // x not strictly increasing
    CHECK_THROWS_AS(PLMap::from_points({pt(0, 0, 0, 0), pt(1, 1, 1, 1)}), std::invalid_argument);
    // Collinear interior points are merged away.
    CHECK(PLMap::from_points({pt(0, 0, 0, 0), pt(1, 1, 1, 1), pt(1, 0, 1, 0)}) ==
          PLMap::identity());
    const PLMap f = builtin_f();
    CHECK(PLMap::from_points({pt(0, 0, 0, 0), pt(1, 4, 1, 4), pt(1, 3, 1, 3), pt(3, 3, 1, 2),
                              pt(1, 1, 1, 1), pt(3, 2, 3, 2), pt(1, 0, 1, 0)}) == f);
  }

  TEST_CASE("str gives diagnostic breakpoint lists") {
    CHECK(PLMap::identity().str() == "(0/2^0,0/2^0)(1/2^0,1/2^0)");
  }
}
