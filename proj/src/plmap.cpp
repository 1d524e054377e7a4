#include "barq/plmap.hpp"

#include <algorithm>
#include <stdexcept>

namespace barq {

namespace {

// Slope of the segment between two points, as log2, or nullopt if the slope is
// not a power of two.  For canonical positive dyadics dy = my/2^ey and
// dx = mx/2^ex the quotient is (my/mx) * 2^(ex-ey), a power of two iff the odd
// mantissas agree.
std::optional<long> segment_slope_log2(const PLMap::Point& p, const PLMap::Point& q) {
  const Dyadic dx = q.x - p.x;
  const Dyadic dy = q.y - p.y;
  if (dx.sign() <= 0 || dy.sign() <= 0) return std::nullopt;
  if (dx.mantissa() != dy.mantissa()) return std::nullopt;
  return dx.exponent() - dy.exponent();
}

}  // namespace

PLMap PLMap::identity() {
  return from_points({{Dyadic(0), Dyadic(0)}, {Dyadic(1), Dyadic(1)}});
}

PLMap PLMap::from_points(std::vector<Point> pts) {
  if (auto why = f_membership_failure(pts)) throw std::invalid_argument(*why);
  PLMap m;
  m.points_.reserve(pts.size());
  m.points_.push_back(pts.front());
  std::vector<long> logs;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const long s = *segment_slope_log2(pts[i], pts[i + 1]);
    if (!logs.empty() && logs.back() == s) {
      // collinear interior point: drop it
      m.points_.back() = pts[i + 1];
      continue;
    }
    logs.push_back(s);
    m.points_.push_back(pts[i + 1]);
  }
  m.slope_logs_ = std::move(logs);
  return m;
}

Dyadic PLMap::operator()(const Dyadic& x) const {
  if (x < points_.front().x || x > points_.back().x)
    throw std::invalid_argument("evaluation outside [0,1]: " + x.str());
  // Largest breakpoint with xs[i] <= x.
  std::size_t lo = 0, hi = points_.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi + 1) / 2;
    if (points_[mid].x <= x)
      lo = mid;
    else
      hi = mid - 1;
  }
  if (lo == points_.size() - 1) return points_.back().y;
  return points_[lo].y + (x - points_[lo].x).mul_pow2(slope_logs_[lo]);
}

Dyadic PLMap::preimage(const Dyadic& y) const {
  if (y < points_.front().y || y > points_.back().y)
    throw std::invalid_argument("preimage outside [0,1]: " + y.str());
  std::size_t lo = 0, hi = points_.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi + 1) / 2;
    if (points_[mid].y <= y)
      lo = mid;
    else
      hi = mid - 1;
  }
  if (lo == points_.size() - 1) return points_.back().x;
  return points_[lo].x + (y - points_[lo].y).mul_pow2(-slope_logs_[lo]);
}

std::vector<Dyadic> PLMap::interior_breakpoints() const {
  std::vector<Dyadic> r;
  for (std::size_t i = 1; i + 1 < points_.size(); ++i) r.push_back(points_[i].x);
  return r;
}

long PLMap::left_slope_log2(const Dyadic& x) const {
  if (x <= points_.front().x || x > points_.back().x)
    throw std::invalid_argument("left slope needs x in (0,1]: " + x.str());
  // Segment [xs[i], xs[i+1]] with xs[i] < x <= xs[i+1].
  std::size_t lo = 0, hi = points_.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi + 1) / 2;
    if (points_[mid].x < x)
      lo = mid;
    else
      hi = mid - 1;
  }
  return slope_logs_[lo];
}

long PLMap::right_slope_log2(const Dyadic& x) const {
  if (x < points_.front().x || x >= points_.back().x)
    throw std::invalid_argument("right slope needs x in [0,1): " + x.str());
  std::size_t lo = 0, hi = points_.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi + 1) / 2;
    if (points_[mid].x <= x)
      lo = mid;
    else
      hi = mid - 1;
  }
  return slope_logs_[lo];
}

std::size_t PLMap::hash() const {
  std::size_t h = 0x51ab;
  for (const Point& p : points_) h = hash_combine(hash_combine(h, p.x.hash()), p.y.hash());
  return h;
}

std::string PLMap::str() const {
  std::string s;
  for (const Point& p : points_) s += "(" + p.x.str() + "," + p.y.str() + ")";
  return s;
}

PLMap compose(const PLMap& a, const PLMap& b) {
  if (a.is_identity()) return b;
  if (b.is_identity()) return a;
  // Candidate breakpoints of a(b(x)): breakpoints of b plus b-preimages of the
  // breakpoints of a; everywhere else both factors are affine.
  std::vector<Dyadic> xs = b.interior_breakpoints();
  for (const Dyadic& t : a.interior_breakpoints()) xs.push_back(b.preimage(t));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<PLMap::Point> pts;
  pts.reserve(xs.size() + 2);
  pts.push_back({Dyadic(0), Dyadic(0)});
  for (const Dyadic& x : xs) pts.push_back({x, a(b(x))});
  pts.push_back({Dyadic(1), Dyadic(1)});
  return PLMap::from_points(std::move(pts));
}

PLMap invert(const PLMap& a) {
  std::vector<PLMap::Point> pts;
  pts.reserve(a.points().size());
  for (const PLMap::Point& p : a.points()) pts.push_back({p.y, p.x});
  return PLMap::from_points(std::move(pts));
}

PLMap pl_pow(const PLMap& a, std::int64_t n) {
  if (n == 0) return PLMap::identity();
  PLMap base = n < 0 ? invert(a) : a;
  std::uint64_t k = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  PLMap acc = PLMap::identity();
  while (k > 0) {
    if (k & 1) acc = compose(acc, base);
    k >>= 1;
    if (k > 0) base = compose(base, base);
  }
  return acc;
}

PLMap star_product(const PLMap& a, const PLMap& b) {
  std::vector<PLMap::Point> pts;
  pts.reserve(a.points().size() + b.points().size() - 1);
  for (const PLMap::Point& p : a.points())
    pts.push_back({p.x.mul_pow2(-1), p.y.mul_pow2(-1)});
  // a's (1,1) already contributed the seam (1/2,1/2); skip b's (0,0).
  for (std::size_t i = 1; i < b.points().size(); ++i) {
    const PLMap::Point& p = b.points()[i];
    pts.push_back({(p.x + Dyadic(1)).mul_pow2(-1), (p.y + Dyadic(1)).mul_pow2(-1)});
  }
  return PLMap::from_points(std::move(pts));
}

std::optional<std::string> f_membership_failure(const std::vector<PLMap::Point>& pts) {
  if (pts.size() < 2) return "breakpoint list needs at least the two endpoints";
  if (!pts.front().x.is_zero() || !pts.front().y.is_zero())
    return "first breakpoint must be (0,0), got (" + pts.front().x.str() + "," +
           pts.front().y.str() + ")";
  if (pts.back().x != Dyadic(1) || pts.back().y != Dyadic(1))
    return "last breakpoint must be (1,1), got (" + pts.back().x.str() + "," +
           pts.back().y.str() + ")";
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (!(pts[i].x < pts[i + 1].x) || !(pts[i].y < pts[i + 1].y))
      return "breakpoints must strictly increase in both coordinates at index " +
             std::to_string(i + 1);
    if (!segment_slope_log2(pts[i], pts[i + 1])) {
      const Dyadic dx = pts[i + 1].x - pts[i].x;
      const Dyadic dy = pts[i + 1].y - pts[i].y;
      return "segment slope " + dy.to_rat().get_str() + "/" + dx.to_rat().get_str() +
             " after x=" + pts[i].x.str() + " is not a power of two";
    }
  }
  return std::nullopt;
}

bool is_in_f(const std::vector<PLMap::Point>& pts) { return !f_membership_failure(pts); }

bool is_in_f(const PLMap&) { return true; }

bool is_in_f_prime(const PLMap& a) {
  // Identity germ at an endpoint = the adjoining segment lies on y = x; since
  // maps fix (0,0) and (1,1), that is exactly slope 1 on the outer segments.
  return a.slope_log2(0) == 0 && a.slope_log2(a.segment_count() - 1) == 0;
}

PLMap builtin_f() {
  return PLMap::from_points({{Dyadic(0), Dyadic(0)},
                             {Dyadic(1, 3), Dyadic(1, 3)},
                             {Dyadic(3, 3), Dyadic(2, 3)},
                             {Dyadic(4, 3), Dyadic(4, 3)},
                             {Dyadic(1), Dyadic(1)}});
}

PLMap builtin_g() {
  return PLMap::from_points({{Dyadic(0), Dyadic(0)},
                             {Dyadic(4, 3), Dyadic(4, 3)},
                             {Dyadic(5, 3), Dyadic(6, 3)},
                             {Dyadic(7, 3), Dyadic(7, 3)},
                             {Dyadic(1), Dyadic(1)}});
}

}  // namespace barq
