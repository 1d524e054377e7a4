#include "barq/gs.hpp"

#include <algorithm>
#include <stdexcept>

namespace barq {

namespace {

void require_fprime(const PLMap& m, const char* slot) {
  if (!is_in_f_prime(m))
    throw std::invalid_argument(std::string("gs cocycle: ") + slot +
                                " argument is not in F' (endpoint slopes " +
                                std::to_string(m.slope_log2(0)) + ", " +
                                std::to_string(m.slope_log2(m.segment_count() - 1)) + ")");
}

std::int64_t det_at(const PLMap& b, const PLMap& ab, const Dyadic& x) {
  // rows (right, left); columns (b, a o b)
  const std::int64_t b_r = b.right_slope_log2(x);
  const std::int64_t b_l = b.left_slope_log2(x);
  const std::int64_t ab_r = ab.right_slope_log2(x);
  const std::int64_t ab_l = ab.left_slope_log2(x);
  return b_r * ab_l - ab_r * b_l;
}

std::vector<Dyadic> summation_set(const PLMap& b, const PLMap& ab,
                                  const std::vector<Dyadic>& extra) {
  std::vector<Dyadic> xs = b.interior_breakpoints();
  for (const Dyadic& x : ab.interior_breakpoints()) xs.push_back(x);
  for (const Dyadic& x : extra) {
    if (x <= Dyadic(0) || x >= Dyadic(1))
      throw std::invalid_argument("extra summation points must lie in (0,1)");
    xs.push_back(x);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

}  // namespace

std::int64_t gs_evaluate(const PLMap& a, const PLMap& b) {
  return gs_evaluate_over(a, b, {});
}

std::int64_t gs_evaluate_over(const PLMap& a, const PLMap& b, const std::vector<Dyadic>& extra) {
  require_fprime(a, "first");
  require_fprime(b, "second");
  const PLMap ab = compose(a, b);
  std::int64_t sum = 0;
  for (const Dyadic& x : summation_set(b, ab, extra)) sum += det_at(b, ab, x);
  return sum;
}

std::vector<GsContribution> gs_contributions(const PLMap& a, const PLMap& b) {
  require_fprime(a, "first");
  require_fprime(b, "second");
  const PLMap ab = compose(a, b);
  std::vector<GsContribution> out;
  for (const Dyadic& x : summation_set(b, ab, {})) out.push_back({x, det_at(b, ab, x)});
  return out;
}

Cochain gs_cochain() {
  return Cochain(2, [](const Tuple& t) -> Rat {
           return Rat(static_cast<long>(
               gs_evaluate(std::get<PLMap>(t[0]), std::get<PLMap>(t[1]))));
         })
      .memoized();
}

std::array<PLMap, 4> psi4_images() {
  const PLMap f = builtin_f();
  const PLMap g = builtin_g();
  const PLMap id = PLMap::identity();
  return {star_product(f, id), star_product(g, id), star_product(id, f), star_product(id, g)};
}

std::array<PLMap, 8> zeta8_images(const std::array<PLMap, 4>& w) {
  const PLMap id = PLMap::identity();
  std::array<PLMap, 8> images = {star_product(w[0], id), star_product(w[1], id),
                                 star_product(w[2], id), star_product(w[3], id),
                                 star_product(id, w[0]), star_product(id, w[1]),
                                 star_product(id, w[2]), star_product(id, w[3])};
  return images;
}

Homomorphism psi2() {
  return Homomorphism::from_generators(Group::free_abelian(2), {builtin_f(), builtin_g()},
                                       Group::fprime());
}

Homomorphism psi4() {
  const auto w = psi4_images();
  return Homomorphism::from_generators(Group::free_abelian(4), {w[0], w[1], w[2], w[3]},
                                       Group::fprime());
}

Homomorphism psi8() {
  const auto b = zeta8_images(psi4_images());
  return Homomorphism::from_generators(Group::free_abelian(8),
                                       std::vector<Element>(b.begin(), b.end()), Group::fprime());
}

std::int64_t zeta8_pairing(par::Mode mode) { return zeta8_pairing(psi4_images(), mode); }

std::int64_t zeta8_pairing(const std::array<PLMap, 4>& w, par::Mode mode) {
  const auto images = zeta8_images(w);
  const Homomorphism psi = Homomorphism::from_generators(
      Group::free_abelian(8), std::vector<Element>(images.begin(), images.end()),
      Group::fprime());
  const Cochain alpha = gs_cochain();
  const Cochain alpha4 = cup(cup(alpha, alpha), cup(alpha, alpha));
  // Warm the alpha memo serially on all 64 image pairs so the parallel sum is
  // pure lookups.
  for (const PLMap& a : images)
    for (const PLMap& b : images) (void)alpha(Tuple{a, b});
  const Rat value = pair_chain(pullback(alpha4, psi), zeta_cycle(8), mode);
  if (value.get_den() != 1)
    throw std::logic_error("zeta8 pairing must be an integer, got " + rat_to_string(value));
  return static_cast<std::int64_t>(value.get_num().get_si());
}

}  // namespace barq
