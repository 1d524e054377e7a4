#include "barq/metrics.hpp"

#include <stdexcept>

namespace barq {

namespace {

void require_degree(const Cochain& w, int degree, const char* what) {
  if (w.degree() != degree)
    throw std::invalid_argument(std::string(what) + " needs a degree-" + std::to_string(degree) +
                                " cochain, got degree " + std::to_string(w.degree()));
}

}  // namespace

Rat oscillation_over(const Cochain& psi, const std::vector<Element>& domain) {
  require_degree(psi, 1, "oscillation");
  if (domain.empty()) return Rat(0);
  Rat lo = psi(Tuple{domain.front()});
  Rat hi = lo;
  for (const Element& h : domain) {
    const Rat v = psi(Tuple{h});
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  return hi - lo;
}

Rat osc_norm(const Cochain& w, const Element& g, const std::vector<Element>& domain) {
  require_degree(w, 2, "oscillation norm");
  if (domain.empty()) return Rat(0);
  Rat lo = w(Tuple{g, domain.front()});
  Rat hi = lo;
  for (const Element& h : domain) {
    const Rat v = w(Tuple{g, h});
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  return hi - lo;
}

Rat osc_norm_exact(const Cochain& w, const Element& g, const Group& finite_group) {
  return osc_norm(w, g, finite_group.elements());
}

Rat lipschitz_length(const Cochain& phi, const Group& group, const Element& g,
                     const std::vector<Element>& domain) {
  require_degree(phi, 1, "lipschitz length");
  Rat best(0);
  for (const Element& h : domain) {
    const Rat v = rat_abs(phi(Tuple{group.multiply(g, h)}) - phi(Tuple{h}));
    if (v > best) best = v;
  }
  return best;
}

Rat lipschitz_length_exact(const Cochain& phi, const Group& finite_group, const Element& g) {
  return lipschitz_length(phi, finite_group, g, finite_group.elements());
}

Rat abs_length_z(std::int64_t g) { return Rat(static_cast<long>(g < 0 ? -g : g)); }

Rat abs_osc_norm_z(std::int64_t g) { return Rat(2) * abs_length_z(g); }

Cochain abs_cochain_z() {
  return Cochain(1, [](const Tuple& t) -> Rat {
    const std::int64_t v = std::get<ZVec>(t[0]).at(0);
    return Rat(static_cast<long>(v < 0 ? -v : v));
  });
}

std::vector<Element> z_window(std::int64_t radius) {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(2 * radius + 1));
  for (std::int64_t k = -radius; k <= radius; ++k) out.emplace_back(ZVec{k});
  return out;
}

StabilityReport coboundary_stability(const Cochain& w, const Cochain& eta,
                                     const Group& finite_group) {
  require_degree(w, 2, "coboundary stability");
  require_degree(eta, 1, "coboundary stability (eta)");
  const Cochain perturbed_raw = [&] {
    const Cochain d_eta = codifferential(eta, finite_group);
    return Cochain(2, [w, d_eta](const Tuple& t) -> Rat { return w(t) + d_eta(t); });
  }();
  const Cochain perturbed = materialize(perturbed_raw, finite_group);
  StabilityReport report;
  report.max_distance = Rat(0);
  for (const Element& g : finite_group.elements()) {
    const Rat d = rat_abs(osc_norm_exact(w, g, finite_group) -
                          osc_norm_exact(perturbed, g, finite_group));
    if (d > report.max_distance) report.max_distance = d;
  }
  report.bound = Rat(2) * oscillation_over(eta, finite_group.elements());
  report.ok = report.max_distance <= report.bound;
  return report;
}

CompareReport compare_constructions(const Cochain& phi, const Group& finite_group) {
  require_degree(phi, 1, "compare constructions");
  const Cochain d_phi = materialize(codifferential(phi, finite_group), finite_group);
  CompareReport report;
  report.ok = true;
  report.max_slack = Rat(0);
  report.total = finite_group.order();
  for (const Element& g : finite_group.elements()) {
    const Rat lhs = osc_norm_exact(d_phi, g, finite_group);
    const Rat rhs = Rat(2) * lipschitz_length_exact(phi, finite_group, g);
    if (lhs > rhs) {
      report.ok = false;
      return report;
    }
    const Rat slack = rhs - lhs;
    if (slack == 0) ++report.tight_count;
    if (slack > report.max_slack) report.max_slack = slack;
  }
  return report;
}

LengthComparisonReport lipschitz_wrt_length(const Cochain& phi, const Group& finite_group,
                                            const std::vector<Rat>& candidate_length) {
  require_degree(phi, 1, "lipschitz_wrt_length");
  if (candidate_length.size() != finite_group.order())
    throw std::invalid_argument("candidate length needs one value per group element");
  LengthComparisonReport report;
  report.displacement_bounded = true;
  const auto& elts = finite_group.elements();
  // First pass: does the candidate bound every displacement?
  bool hypothesis = true;
  for (std::size_t gi = 0; gi < elts.size(); ++gi) {
    const Rat len_phi = lipschitz_length_exact(phi, finite_group, elts[gi]);
    for (const Element& h : elts) {
      const Rat disp = rat_abs(phi(Tuple{finite_group.multiply(elts[gi], h)}) - phi(Tuple{h}));
      if (disp > len_phi) report.displacement_bounded = false;
      if (disp > candidate_length[gi]) hypothesis = false;
    }
  }
  // Second pass: a candidate that bounds displacement dominates the length;
  // one that does not bound it satisfies the implication vacuously.
  report.minimal = true;
  if (hypothesis) {
    for (std::size_t gi = 0; gi < elts.size(); ++gi)
      if (lipschitz_length_exact(phi, finite_group, elts[gi]) > candidate_length[gi])
        report.minimal = false;
  }
  return report;
}

}  // namespace barq
