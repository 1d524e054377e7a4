#pragma once

#include "barq/cochain.hpp"
#include "barq/plmap.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace barq {

struct GsContribution {
  Dyadic x;
  std::int64_t det;
};

// The discrete 2-cocycle on F' built from one-sided slope data:
//
//   alpha(a, b) = sum over x in bp(b) union bp(a o b) of
//                 | log2 b'_R(x)      log2 (a o b)'_R(x) |
//                 | log2 b'_L(x)      log2 (a o b)'_L(x) |
//
// Orientation: the rows are (right, left).  With rows (left, right) the single
// contributing breakpoint of the built-in pair (f, g) evaluates to -1; this
// row order is the global sign normalization that makes alpha(f, g) = +1.
// Away from breakpoints of both b and a o b the two rows coincide, so
// enlarging the summation set never changes the value.  Requires both
// arguments in F' (one-sided log-slopes at 0 and 1 would otherwise not both
// vanish and the finite-sum formula would not be available).
std::int64_t gs_evaluate(const PLMap& a, const PLMap& b);

// Per-breakpoint determinants over the summation set (zero entries included).
std::vector<GsContribution> gs_contributions(const PLMap& a, const PLMap& b);

// Same sum over the union enlarged by extra points in (0,1); must equal
// gs_evaluate (the added determinants vanish).
std::int64_t gs_evaluate_over(const PLMap& a, const PLMap& b, const std::vector<Dyadic>& extra);

// The cocycle as a memoized degree-2 cochain over the F' backend.
Cochain gs_cochain();

// The standard pairing homomorphisms: psi2 sends e1, e2 to f, g; psi4 sends
// the four generators to f*1, g*1, 1*f, 1*g; psi8 doubles psi4's images once
// more, {w*1 : w image of psi4} followed by {1*w}.  Images pairwise commute
// (disjoint supports), which from_generators verifies mechanically.
Homomorphism psi2();
Homomorphism psi4();
Homomorphism psi8();

// The eight psi8 images for w1..w4 = f*1, g*1, 1*f, 1*g in the given order.
std::array<PLMap, 8> zeta8_images(const std::array<PLMap, 4>& w);
std::array<PLMap, 4> psi4_images();

// <psi8^* alpha^4, zeta_8>: the full 40320-term alternating sum, computed
// exactly; the permutation terms are partitioned across worker threads.
std::int64_t zeta8_pairing(par::Mode mode = par::Mode::parallel);
std::int64_t zeta8_pairing(const std::array<PLMap, 4>& w, par::Mode mode = par::Mode::parallel);

}  // namespace barq
