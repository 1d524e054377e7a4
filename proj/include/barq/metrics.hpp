#pragma once

#include "barq/cochain.hpp"

#include <cstdint>
#include <vector>

namespace barq {

// Oscillation of a function over a point set: sup |psi(h) - psi(h')|, which
// equals max - min.  Over a finite group's full element list this is exact;
// over a sample it is a certified lower bound (monotone in the sample set).
Rat oscillation_over(const Cochain& psi /* degree 1 */, const std::vector<Element>& domain);

// Norm from a degree-2 cocycle: ||g||_w = osc of h -> w(g, h).  For a cocycle
// the triangle inequality ||g1 g2|| <= ||g1|| + ||g2|| follows from the
// cocycle identity, and ||1|| = 0 because w(1, .) is constant.
Rat osc_norm(const Cochain& w /* degree 2 */, const Element& g, const std::vector<Element>& domain);
Rat osc_norm_exact(const Cochain& w, const Element& g, const Group& finite_group);

// Length from a bounded function: |g|_phi = sup_h |phi(gh) - phi(h)|.
// Symmetric (|g| = |g^-1|) and subadditive, so d(a,b) = |ab^-1|_phi is a
// right-invariant pseudometric.
Rat lipschitz_length(const Cochain& phi /* degree 1 */, const Group& group, const Element& g,
                     const std::vector<Element>& domain);
Rat lipschitz_length_exact(const Cochain& phi, const Group& finite_group, const Element& g);

// Closed forms on Z with phi = absolute value (elements of z1):
//   |g|_phi = |g|       (sup attained at h = 0; |.| is 1-Lipschitz)
//   ||g||_{d phi} = 2|g| (h -> |h| - |g+h| spans exactly [-|g|, |g|])
// These make the comparison bound ||g||_{d phi} <= 2 |g|_phi tight on Z.
Rat abs_length_z(std::int64_t g);
Rat abs_osc_norm_z(std::int64_t g);
// The degree-1 cochain |.| on z1 (for window verification of the closed forms).
Cochain abs_cochain_z();
std::vector<Element> z_window(std::int64_t radius);

struct StabilityReport {
  bool ok = false;
  Rat max_distance;  // max_g | ||g||_w - ||g||_{w + d eta} |
  Rat bound;         // 2 |eta|_osc
};

// Changing the cocycle by the coboundary of a bounded eta moves every norm by
// at most 2 |eta|_osc: the h-dependent part of (d eta)(g, .) is
// eta(.) - eta(g .), of oscillation at most 2 |eta|_osc.
StabilityReport coboundary_stability(const Cochain& w, const Cochain& eta,
                                     const Group& finite_group);

struct CompareReport {
  bool ok = false;     // ||g||_{d phi} <= 2 |g|_phi for every g
  Rat max_slack;       // max of 2|g|_phi - ||g||_{d phi}
  std::size_t tight_count = 0;  // elements where the bound is attained
  std::size_t total = 0;
};

// The two constructions compared on the coboundary of phi.
CompareReport compare_constructions(const Cochain& phi, const Group& finite_group);

struct LengthComparisonReport {
  bool displacement_bounded = false;  // |phi(gh) - phi(h)| <= |g|_phi everywhere
  bool minimal = false;               // any length with that property dominates |.|_phi
};

// |.|_phi is the minimal length controlling phi-displacement: direction one is
// the definition of the sup, direction two takes the sup over h in the
// hypothesis |phi(gh) - phi(h)| <= len(g).
LengthComparisonReport lipschitz_wrt_length(const Cochain& phi, const Group& finite_group,
                                            const std::vector<Rat>& candidate_length);

}  // namespace barq
