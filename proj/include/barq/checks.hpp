#pragma once

#include "barq/cochain.hpp"
#include "barq/homotopy.hpp"
#include "barq/metrics.hpp"

#include <string>

namespace barq {

// One verdict per identity scan.  Scans are exhaustive over the finite tuple
// space, exact, and report the minimal failing tuple (deterministic at any
// thread count).
struct CheckResult {
  std::string name;
  bool pass = true;
  std::string counterexample;  // empty when pass
  std::string detail;          // lhs/rhs values at the counterexample

  static CheckResult passed(std::string name) { return CheckResult{std::move(name), true, "", ""}; }
};

// --- bar-complex structure -------------------------------------------------
CheckResult check_delta_delta_zero(const Group& group, const Cochain& w, par::Mode mode = par::Mode::parallel);
CheckResult check_cup_leibniz(const Group& group, const Cochain& a, const Cochain& b, par::Mode mode = par::Mode::parallel);
CheckResult check_hat_involution(const Group& group, const Cochain& w, par::Mode mode = par::Mode::parallel);
CheckResult check_hat_chain_map(const Group& group, const Cochain& w, par::Mode mode = par::Mode::parallel);
CheckResult check_pullback_commutes(const Homomorphism& psi, const Cochain& w, par::Mode mode = par::Mode::parallel);
// <d eta, z> = 0: z pairs to zero against every coboundary.
CheckResult check_cycle_certificate(const Chain& z, const Cochain& eta, par::Mode mode = par::Mode::parallel);

// --- contracting-operator identities (w of degree >= 1 over a finite group) -
// M(dw) + d(Mw) = w
CheckResult check_averaging_homotopy(const Group& group, const Cochain& w, par::Mode mode = par::Mode::parallel);
// d(L0 w) + L0(dw) = w (as constant functions of the module variable)
CheckResult check_lambda0_homotopy(const Group& group, const Cochain& w, par::Mode mode = par::Mode::parallel);
// L(dw) = -d(L w) in the quotient module
CheckResult check_lambda_anticommutes(const Group& group, const Cochain& w, par::Mode mode = par::Mode::parallel);
// d(Hw) + H(dw) = w for 1-constant w
CheckResult check_one_constant_homotopy(const Group& group, const Cochain& w, par::Mode mode = par::Mode::parallel);
// d(L0 w) = w for cocycles w (constant-function values extracted exactly)
CheckResult check_bockstein_comparison(const Group& group, const Cochain& cocycle, par::Mode mode = par::Mode::parallel);
// w = d(Mw) for cocycles w
CheckResult check_comparison_vanishing(const Group& group, const Cochain& cocycle, par::Mode mode = par::Mode::parallel);

// --- metric structure --------------------------------------------------------
// ||1||_w = 0, values >= 0, and the triangle inequality over all pairs.
CheckResult check_pseudometric_axioms(const Group& group, const Cochain& cocycle, par::Mode mode = par::Mode::parallel);
// The mechanism behind the triangle inequality: for a cocycle w,
// w(g1 g2, h) - w(g1 g2, h') = [w(g2,h) - w(g2,h')] + [w(g1,g2 h) - w(g1,g2 h')].
CheckResult check_osc_mechanism(const Group& group, const Cochain& cocycle, par::Mode mode = par::Mode::parallel);

// --- helpers for building random test data over finite groups ---------------
Cochain random_table_cochain(Rng& rng, const Group& group, int degree, int range = 9);
// A random cocycle: the coboundary of a random (degree-1)-cochain (over Q on a
// finite group these exhaust the cocycles in positive degree).
Cochain random_cocycle(Rng& rng, const Group& group, int degree, int range = 9);
// A random 1-constant cochain (value independent of the first slot).
Cochain random_one_constant_cochain(Rng& rng, const Group& group, int degree, int range = 9);
// Deterministic nonlinear cochain on a free abelian group, for coboundary
// certificates on infinite backends: a product over slots of small random
// quadratics in the coordinates.
Cochain random_polynomial_cochain_zd(Rng& rng, int rank, int degree, int range = 3);

std::string tuple_str(const Group& group, const Tuple& t);

}  // namespace barq
