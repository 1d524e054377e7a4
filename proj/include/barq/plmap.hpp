#pragma once

#include "barq/dyadic.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace barq {

// Piecewise-linear homeomorphism of [0,1] with dyadic breakpoints and slopes
// that are integer powers of two, i.e. an element of Thompson's group F.
// Invariants (checked at construction, preserved by every operation):
//   * breakpoints strictly increase in both coordinates, from (0,0) to (1,1);
//   * every segment slope is 2^s for an integer s (stored as s);
//   * the breakpoint list is canonical: no interior point has equal slopes on
//     both sides.  Canonical form makes operator== a correct group equality.
class PLMap {
 public:
  struct Point {
    Dyadic x, y;
    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  };

  static PLMap identity();
  // Validates and canonicalizes; throws std::invalid_argument on non-monotone
  // data, wrong endpoints, or a slope that is not a power of two.
  static PLMap from_points(std::vector<Point> pts);

  const std::vector<Point>& points() const { return points_; }
  std::size_t segment_count() const { return slope_logs_.size(); }
  long slope_log2(std::size_t segment) const { return slope_logs_.at(segment); }

  bool is_identity() const { return points_.size() == 2; }

  Dyadic operator()(const Dyadic& x) const;  // exact evaluation, x in [0,1]
  Dyadic preimage(const Dyadic& y) const;    // exact inverse image, y in [0,1]

  // Breakpoints in the open interval (0,1).
  std::vector<Dyadic> interior_breakpoints() const;

  // log2 of the one-sided derivatives.  left: x in (0,1]; right: x in [0,1).
  long left_slope_log2(const Dyadic& x) const;
  long right_slope_log2(const Dyadic& x) const;

  bool operator==(const PLMap& o) const { return points_ == o.points_; }
  bool operator!=(const PLMap& o) const { return !(*this == o); }

  std::size_t hash() const;
  std::string str() const;  // "(0/2^0,0/2^0)(1/2^3,1/2^3)..." for diagnostics

 private:
  PLMap() = default;
  std::vector<Point> points_;
  std::vector<long> slope_logs_;
};

// (a `compose` b)(x) = a(b(x)).
PLMap compose(const PLMap& a, const PLMap& b);
PLMap invert(const PLMap& a);
PLMap pl_pow(const PLMap& a, std::int64_t n);

// (a*b)(x) = a(2x)/2 on [0,1/2] and (b(2x-1)+1)/2 on [1/2,1]: a and b act on
// the two halves of the interval at half scale.
PLMap star_product(const PLMap& a, const PLMap& b);

// Membership test on raw breakpoint data (for data not yet accepted by
// from_points): nullopt means the data describes an element of F, otherwise
// the reason it does not.
std::optional<std::string> f_membership_failure(const std::vector<PLMap::Point>& pts);
bool is_in_f(const std::vector<PLMap::Point>& pts);
// Every constructed PLMap is in F by the type invariants.
bool is_in_f(const PLMap& a);
// F' membership: identity germ at both endpoints (first and last slope 1).
bool is_in_f_prime(const PLMap& a);

// The two built-in commuting elements of F' used throughout: f is supported on
// [0,1/2] (breakpoints at eighths: (1/8,1/8),(3/8,2/8),(1/2,1/2)), g is its
// mirror image supported on [1/2,1] ((1/2,1/2),(5/8,6/8),(7/8,7/8)).
PLMap builtin_f();
PLMap builtin_g();

}  // namespace barq
