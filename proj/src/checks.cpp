#include "barq/checks.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace barq {

namespace {

// Exhaustive scan driver.  `probe` returns nullopt on success and a detail
// string at a failure; the scan reports the minimal failing tuple index, so
// the counterexample is independent of the thread count.
CheckResult scan_tuples(std::string name, const Group& group, int arity, par::Mode mode,
                        const std::function<std::optional<std::string>(const Tuple&)>& probe) {
  const std::size_t total = tuple_space_size(group, arity);
  auto bad = par::first_failure(
      total, [&](std::size_t i) { return !probe(tuple_from_index(group, arity, i)).has_value(); },
      mode);
  if (!bad) return CheckResult::passed(std::move(name));
  const Tuple t = tuple_from_index(group, arity, *bad);
  CheckResult r;
  r.name = std::move(name);
  r.pass = false;
  std::ostringstream os;
  os << "tuple[" << *bad << "] = " << tuple_str(group, t);
  r.counterexample = os.str();
  r.detail = probe(t).value_or("");
  return r;
}

std::optional<std::string> rat_mismatch(const Rat& lhs, const Rat& rhs) {
  if (lhs == rhs) return std::nullopt;
  return "lhs = " + rat_to_string(lhs) + ", rhs = " + rat_to_string(rhs);
}

std::optional<std::string> linf_mismatch(const Group& group, const LinfElement& lhs,
                                         const LinfElement& rhs) {
  const auto& a = lhs.values();
  const auto& b = rhs.values();
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != b[k]) {
      return "at h = " + group.element_str(group.elements()[k]) + ": lhs(h) = " +
             rat_to_string(a[k]) + ", rhs(h) = " + rat_to_string(b[k]);
    }
  }
  return std::nullopt;
}

CheckResult failed(std::string name, std::string counterexample, std::string detail = "") {
  CheckResult r;
  r.name = std::move(name);
  r.pass = false;
  r.counterexample = std::move(counterexample);
  r.detail = std::move(detail);
  return r;
}

}  // namespace

std::string tuple_str(const Group& group, const Tuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ", ";
    s += group.element_str(t[i]);
  }
  return s + ")";
}

CheckResult check_delta_delta_zero(const Group& group, const Cochain& w, par::Mode mode) {
  const Cochain ddw = codifferential(codifferential(w, group), group);
  return scan_tuples("delta_delta_zero", group, w.degree() + 2, mode,
                     [&](const Tuple& t) { return rat_mismatch(ddw(t), Rat(0)); });
}

CheckResult check_cup_leibniz(const Group& group, const Cochain& a, const Cochain& b,
                              par::Mode mode) {
  const int p = a.degree();
  const Cochain lhs = codifferential(cup(a, b), group);
  const Cochain da_b = cup(codifferential(a, group), b);
  const Cochain a_db = cup(a, codifferential(b, group));
  const int sign = (p % 2 == 0) ? 1 : -1;
  return scan_tuples("cup_leibniz", group, p + b.degree() + 1, mode, [&](const Tuple& t) {
    return rat_mismatch(lhs(t), da_b(t) + Rat(sign) * a_db(t));
  });
}

CheckResult check_hat_involution(const Group& group, const Cochain& w, par::Mode mode) {
  const Cochain ww = hat_involution(hat_involution(w, group), group);
  return scan_tuples("hat_involution", group, w.degree(), mode,
                     [&](const Tuple& t) { return rat_mismatch(ww(t), w(t)); });
}

CheckResult check_hat_chain_map(const Group& group, const Cochain& w, par::Mode mode) {
  const Cochain lhs = codifferential(hat_involution(w, group), group);
  const Cochain rhs = hat_involution(codifferential(w, group), group);
  return scan_tuples("hat_chain_map", group, w.degree() + 1, mode,
                     [&](const Tuple& t) { return rat_mismatch(lhs(t), rhs(t)); });
}

CheckResult check_pullback_commutes(const Homomorphism& psi, const Cochain& w, par::Mode mode) {
  if (!psi.source().is_finite()) {
    throw std::invalid_argument(
        "check_pullback_commutes: exhaustive scan needs a finite source group");
  }
  const Cochain lhs = codifferential(pullback(w, psi), psi.source());
  const Cochain rhs = pullback(codifferential(w, psi.target()), psi);
  return scan_tuples("pullback_commutes", psi.source(), w.degree() + 1, mode,
                     [&](const Tuple& t) { return rat_mismatch(lhs(t), rhs(t)); });
}

CheckResult check_cycle_certificate(const Chain& z, const Cochain& eta, par::Mode mode) {
  if (eta.degree() != z.degree() - 1) {
    throw std::invalid_argument("check_cycle_certificate: eta must have degree n-1");
  }
  const Rat value = pair_chain(codifferential(eta, z.group()), z, mode);
  if (value == 0) return CheckResult::passed("cycle_certificate");
  return failed("cycle_certificate", "<d eta, z> = " + rat_to_string(value));
}

CheckResult check_averaging_homotopy(const Group& group, const Cochain& w, par::Mode mode) {
  const Mean mean(group);
  const Cochain m_dw = averaging_contraction(codifferential(w, group), mean);
  const Cochain d_mw = codifferential(averaging_contraction(w, mean), group);
  return scan_tuples("averaging_homotopy", group, w.degree(), mode, [&](const Tuple& t) {
    return rat_mismatch(m_dw(t) + d_mw(t), w(t));
  });
}

CheckResult check_lambda0_homotopy(const Group& group, const Cochain& w, par::Mode mode) {
  const ModuleCochain d_l0w = module_codifferential(lambda0(w, group));
  const ModuleCochain l0_dw = lambda0(codifferential(w, group), group);
  return scan_tuples("lambda0_homotopy", group, w.degree(), mode, [&](const Tuple& t) {
    return linf_mismatch(group, d_l0w(t) + l0_dw(t), LinfElement::constant(group, w(t)));
  });
}

CheckResult check_lambda_anticommutes(const Group& group, const Cochain& w, par::Mode mode) {
  const ModuleCochain d_lw = module_codifferential(lambda_quotient(w, group));
  const ModuleCochain l_dw = lambda_quotient(codifferential(w, group), group);
  const LinfElement zero = LinfElement::constant(group, Rat(0));
  return scan_tuples("lambda_anticommutes", group, w.degree(), mode, [&](const Tuple& t) {
    // Both sides are normalized at the identity, so the sum of the two
    // sections represents the zero class iff it is literally zero.
    return linf_mismatch(group, d_lw(t) + l_dw(t), zero);
  });
}

CheckResult check_one_constant_homotopy(const Group& group, const Cochain& w, par::Mode mode) {
  if (auto witness = find_non_one_constant_witness(w, group)) {
    return failed("one_constant_homotopy", tuple_str(group, *witness),
                  "input depends on its first argument");
  }
  const Cochain d_hw = codifferential(one_constant_contraction(w, group), group);
  const Cochain h_dw = one_constant_contraction(codifferential(w, group), group);
  return scan_tuples("one_constant_homotopy", group, w.degree(), mode, [&](const Tuple& t) {
    return rat_mismatch(d_hw(t) + h_dw(t), w(t));
  });
}

CheckResult check_bockstein_comparison(const Group& group, const Cochain& cocycle, par::Mode mode) {
  std::optional<Cochain> recovered;
  try {
    recovered = bockstein_of_lambda(cocycle, group);
  } catch (const std::exception& e) {
    return failed("bockstein_comparison", e.what());
  }
  return scan_tuples("bockstein_comparison", group, cocycle.degree(), mode, [&](const Tuple& t) {
    return rat_mismatch((*recovered)(t), cocycle(t));
  });
}

CheckResult check_comparison_vanishing(const Group& group, const Cochain& cocycle, par::Mode mode) {
  const Mean mean(group);
  const Cochain d_mw = codifferential(averaging_contraction(cocycle, mean), group);
  return scan_tuples("comparison_vanishing", group, cocycle.degree(), mode, [&](const Tuple& t) {
    return rat_mismatch(d_mw(t), cocycle(t));
  });
}

CheckResult check_pseudometric_axioms(const Group& group, const Cochain& cocycle, par::Mode mode) {
  if (cocycle.degree() != 2) {
    throw std::invalid_argument("check_pseudometric_axioms: needs a degree-2 cochain");
  }
  const std::size_t m = group.order();
  std::vector<Rat> norms(m);
  for (std::size_t i = 0; i < m; ++i) {
    norms[i] = osc_norm_exact(cocycle, group.elements()[i], group);
  }
  const std::size_t id = group.index_of(group.identity());
  if (norms[id] != 0) {
    return failed("pseudometric_axioms", "||1|| = " + rat_to_string(norms[id]),
                  "the identity must have norm 0");
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (norms[i] < 0) {
      return failed("pseudometric_axioms", "||" + group.element_str(group.elements()[i]) + "|| = " +
                                               rat_to_string(norms[i]),
                    "norms must be nonnegative");
    }
  }
  auto bad = par::first_failure(
      m * m,
      [&](std::size_t k) {
        const std::size_t i = k / m, j = k % m;
        const std::size_t ij = group.index_of(group.multiply(group.elements()[i], group.elements()[j]));
        return norms[ij] <= norms[i] + norms[j];
      },
      mode);
  if (!bad) return CheckResult::passed("pseudometric_axioms");
  const std::size_t i = *bad / m, j = *bad % m;
  const Element g = group.elements()[i], h = group.elements()[j];
  const std::size_t ij = group.index_of(group.multiply(g, h));
  return failed("pseudometric_axioms",
                "g = " + group.element_str(g) + ", h = " + group.element_str(h),
                "||gh|| = " + rat_to_string(norms[ij]) + " > " + rat_to_string(norms[i]) + " + " +
                    rat_to_string(norms[j]));
}

CheckResult check_osc_mechanism(const Group& group, const Cochain& cocycle, par::Mode mode) {
  if (cocycle.degree() != 2) {
    throw std::invalid_argument("check_osc_mechanism: needs a degree-2 cochain");
  }
  // The cocycle identity rearranged into the difference form that bounds the
  // oscillation of w(g1 g2, .) by the oscillations for g1 and g2:
  //   w(g1g2,h) - w(g1g2,h') = [w(g2,h) - w(g2,h')] + [w(g1,g2h) - w(g1,g2h')].
  return scan_tuples("osc_mechanism", group, 4, mode, [&](const Tuple& t) {
    const Element& g1 = t[0];
    const Element& g2 = t[1];
    const Element& h = t[2];
    const Element& hp = t[3];
    const Element g12 = group.multiply(g1, g2);
    const Rat lhs = cocycle({g12, h}) - cocycle({g12, hp});
    const Rat rhs = (cocycle({g2, h}) - cocycle({g2, hp})) +
                    (cocycle({g1, group.multiply(g2, h)}) - cocycle({g1, group.multiply(g2, hp)}));
    return rat_mismatch(lhs, rhs);
  });
}

Cochain random_table_cochain(Rng& rng, const Group& group, int degree, int range) {
  const std::size_t size = tuple_space_size(group, degree);
  return Cochain::from_table(group, degree, rng.table(size, range));
}

Cochain random_cocycle(Rng& rng, const Group& group, int degree, int range) {
  if (degree < 1) throw std::invalid_argument("random_cocycle: degree must be >= 1");
  // Materialized so downstream scans pay one table lookup per evaluation.
  return materialize(codifferential(random_table_cochain(rng, group, degree - 1, range), group),
                     group);
}

Cochain random_one_constant_cochain(Rng& rng, const Group& group, int degree, int range) {
  if (degree < 1) throw std::invalid_argument("random_one_constant_cochain: degree must be >= 1");
  const Cochain tail = random_table_cochain(rng, group, degree - 1, range);
  return Cochain(degree, [tail](const Tuple& t) {
    return tail(Tuple(t.begin() + 1, t.end()));
  });
}

Cochain random_polynomial_cochain_zd(Rng& rng, int rank, int degree, int range) {
  if (degree < 1 || rank < 1) {
    throw std::invalid_argument("random_polynomial_cochain_zd: rank and degree must be >= 1");
  }
  // One small quadratic per slot; the value is the product over slots.
  std::vector<std::vector<std::int64_t>> quad(degree), lin(degree);
  std::vector<std::int64_t> off(degree);
  for (int s = 0; s < degree; ++s) {
    quad[s].reserve(rank);
    lin[s].reserve(rank);
    for (int i = 0; i < rank; ++i) {
      quad[s].push_back(rng.uniform(-range, range));
      lin[s].push_back(rng.uniform(-range, range));
    }
    off[s] = rng.uniform(-range, range);
  }
  return Cochain(degree, [quad, lin, off, rank](const Tuple& t) {
    Rat prod(1);
    for (std::size_t s = 0; s < t.size(); ++s) {
      const ZVec& v = std::get<ZVec>(t[s]);
      Rat q(off[s]);
      for (int i = 0; i < rank; ++i) {
        q += Rat(quad[s][i]) * Rat(v[i]) * Rat(v[i]) + Rat(lin[s][i]) * Rat(v[i]);
      }
      prod *= q;
    }
    return prod;
  });
}

}  // namespace barq
