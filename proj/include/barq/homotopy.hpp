#pragma once

#include "barq/cochain.hpp"
#include "barq/linf.hpp"
#include "barq/rng.hpp"

#include <optional>

namespace barq {

// Averaging contraction over the first slot,
//   (M w)(g_1,...,g_{n-1}) = mean_h w(h, g_1,...,g_{n-1}).
// On a finite group with the uniform mean this satisfies
//   M(dw) + d(Mw) = w        for every w of degree >= 1:
// expanding d in the first slot telescopes, the mean's right-invariance kills
// the twisted term, and the surviving term is w itself.  Consequently a
// cocycle w equals d(Mw) on the nose.
Cochain averaging_contraction(const Cochain& w, const Mean& mean);

// Slot-shift into module coefficients,
//   (L0 w)(g_1,...,g_{n-1})(h) = w(h, g_1,...,g_{n-1}),
// which satisfies d(L0 w) + L0(dw) = w (the right side read as a constant
// function of h).  Same telescoping as M with the mean replaced by honest
// dependence on h.
ModuleCochain lambda0(const Cochain& w, const Group& group);

// L0 followed by the quotient map to linf/R (normalized-at-identity section).
// Kernel contains exactly the 1-constant cochains, and the quotient turns the
// homotopy identity into anticommutation: d(L w) = -L(dw).
ModuleCochain lambda_quotient(const Cochain& w, const Group& group);

// A cochain is 1-constant when its value never depends on the first argument.
std::optional<Tuple> find_non_one_constant_witness(const Cochain& w, const Group& group);

// Contraction of the 1-constant subcomplex:
//   (H w)(x_1,...,x_{n-1}) = w(1, 1, x_2,...,x_{n-1})   (n >= 2)
//   (H w)()              = w(1)                          (n == 1)
// satisfying d(Hw) + H(dw) = w for 1-constant w.  Rejects non-1-constant
// input (checked exhaustively; the witness tuple is reported).
Cochain one_constant_contraction(const Cochain& w, const Group& group);

// For a cocycle w, the module coboundary of the lift L0 w lands in the
// constants, and extracting those constants returns w itself:
//   d(L0 w) = w - L0(dw) = w.
// This is the degree-preserving comparison obtained by connecting L w back
// through the quotient sequence R -> linf -> linf/R.  Verifies that w is a
// cocycle and that every value of d(L0 w) is a constant function.
Cochain bockstein_of_lambda(const Cochain& w, const Group& group);

// Same with the non-canonical lift L0 w + shift (shift a rational cochain of
// degree n-1 read as constant functions); the output moves by the coboundary
// of shift.
Cochain bockstein_with_lift_shift(const Cochain& w, const Group& group, const Cochain& shift);

struct SplittingReport {
  bool invariant = false;        // mean(h.F) = mean(F) for all h, sampled F
  bool splits_constants = false; // mean(const c) = c
  std::string counterexample;
};

// The uniform mean as a left-inverse of R -> linf(Gamma), invariant under the
// module action.
SplittingReport splitting_check(const Mean& mean, Rng& rng, int trials);

}  // namespace barq
