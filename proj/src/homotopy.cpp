#include "barq/homotopy.hpp"

#include <stdexcept>

namespace barq {

Cochain averaging_contraction(const Cochain& w, const Mean& mean) {
  if (w.degree() < 1)
    throw std::invalid_argument("averaging contraction needs degree >= 1");
  const int n = w.degree();
  return Cochain(n - 1, [w, mean](const Tuple& t) -> Rat {
    return mean.average([&](const Element& h) {
      Tuple full;
      full.reserve(t.size() + 1);
      full.push_back(h);
      full.insert(full.end(), t.begin(), t.end());
      return w(full);
    });
  });
}

ModuleCochain lambda0(const Cochain& w, const Group& group) {
  if (w.degree() < 1) throw std::invalid_argument("lambda0 needs degree >= 1");
  const int n = w.degree();
  return ModuleCochain(group, n - 1, ModuleCoeff::linf, [w, group](const Tuple& t) -> LinfElement {
    return LinfElement::from_function(group, [&](const Element& h) {
      Tuple full;
      full.reserve(t.size() + 1);
      full.push_back(h);
      full.insert(full.end(), t.begin(), t.end());
      return w(full);
    });
  });
}

ModuleCochain lambda_quotient(const Cochain& w, const Group& group) {
  ModuleCochain l0 = lambda0(w, group);
  const int degree = l0.degree();
  return ModuleCochain(group, degree, ModuleCoeff::linf_mod_r,
                       [l0](const Tuple& t) -> LinfElement {
                         return l0(t).normalized_at_identity();
                       });
}

std::optional<Tuple> find_non_one_constant_witness(const Cochain& w, const Group& group) {
  const int n = w.degree();
  if (n == 0) return std::nullopt;
  // Scan tuples grouped by (g_2,...,g_n); inside a class the value must match
  // the first-argument-= identity representative.
  const std::size_t tail_count = tuple_space_size(group, n - 1);
  const std::size_t order = group.order();
  for (std::size_t tail_idx = 0; tail_idx < tail_count; ++tail_idx) {
    Tuple t = tuple_from_index(group, n - 1, tail_idx);
    t.insert(t.begin(), group.identity());
    const Rat reference = w(t);
    for (std::size_t i = 0; i < order; ++i) {
      t[0] = group.elements()[i];
      if (w(t) != reference) return t;
    }
  }
  return std::nullopt;
}

Cochain one_constant_contraction(const Cochain& w, const Group& group) {
  if (w.degree() < 1)
    throw std::invalid_argument("one-constant contraction needs degree >= 1");
  if (auto witness = find_non_one_constant_witness(w, group)) {
    std::string s;
    for (const Element& e : *witness) s += " " + group.element_str(e);
    throw std::invalid_argument("cochain is not 1-constant; witness tuple:" + s);
  }
  const int n = w.degree();
  const Element id = group.identity();
  return Cochain(n - 1, [w, id, n](const Tuple& t) -> Rat {
    Tuple full;
    full.reserve(static_cast<std::size_t>(n));
    full.push_back(id);
    if (n >= 2) {
      full.push_back(id);
      full.insert(full.end(), t.begin() + 1, t.end());
    }
    return w(full);
  });
}

namespace {

Cochain extract_constants(const ModuleCochain& mc, const std::string& context) {
  const Group group = mc.group();
  const int degree = mc.degree();
  const std::size_t count = tuple_space_size(group, degree);
  std::vector<Rat> values;
  values.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const Tuple t = tuple_from_index(group, degree, i);
    const LinfElement v = mc(t);
    if (!v.is_constant()) {
      std::string s;
      for (const Element& e : t) s += " " + group.element_str(e);
      throw std::invalid_argument(context + ": value is not a constant function at tuple:" + s);
    }
    values.push_back(v.values().front());
  }
  return Cochain::from_table(group, degree, std::move(values));
}

void require_cocycle(const Cochain& w, const Group& group, const std::string& context) {
  const Cochain dw = codifferential(w, group);
  const std::size_t count = tuple_space_size(group, dw.degree());
  for (std::size_t i = 0; i < count; ++i) {
    const Tuple t = tuple_from_index(group, dw.degree(), i);
    if (dw(t) != 0) {
      std::string s;
      for (const Element& e : t) s += " " + group.element_str(e);
      throw std::invalid_argument(context + ": input is not a cocycle; d(w) != 0 at tuple:" + s);
    }
  }
}

}  // namespace

Cochain bockstein_of_lambda(const Cochain& w, const Group& group) {
  if (w.degree() < 1) throw std::invalid_argument("bockstein comparison needs degree >= 1");
  require_cocycle(w, group, "bockstein_of_lambda");
  return extract_constants(module_codifferential(lambda0(w, group)), "bockstein_of_lambda");
}

Cochain bockstein_with_lift_shift(const Cochain& w, const Group& group, const Cochain& shift) {
  if (w.degree() < 1) throw std::invalid_argument("bockstein comparison needs degree >= 1");
  if (shift.degree() != w.degree() - 1)
    throw std::invalid_argument("lift shift must have degree one below the cocycle");
  require_cocycle(w, group, "bockstein_with_lift_shift");
  ModuleCochain l0 = lambda0(w, group);
  ModuleCochain shifted(group, l0.degree(), ModuleCoeff::linf,
                        [l0, shift, group](const Tuple& t) -> LinfElement {
                          return l0(t) + LinfElement::constant(group, shift(t));
                        });
  return extract_constants(module_codifferential(shifted), "bockstein_with_lift_shift");
}

SplittingReport splitting_check(const Mean& mean, Rng& rng, int trials) {
  const Group& group = mean.group();
  SplittingReport report;
  report.invariant = true;
  report.splits_constants = true;
  for (int trial = 0; trial < trials && report.invariant; ++trial) {
    const LinfElement f =
        LinfElement(group, rng.table(group.order()));
    const Rat base = mean.average([&](const Element& g) { return f.at(g); });
    for (const Element& h : group.elements()) {
      const LinfElement acted = f.acted_by(h);
      const Rat moved = mean.average([&](const Element& g) { return acted.at(g); });
      if (moved != base) {
        report.invariant = false;
        report.counterexample = "mean(h.F) != mean(F) at h = " + group.element_str(h);
        break;
      }
    }
  }
  for (int trial = 0; trial < trials && report.splits_constants; ++trial) {
    const Rat c = rng.small_rational();
    const LinfElement f = LinfElement::constant(group, c);
    if (mean.average([&](const Element& g) { return f.at(g); }) != c) {
      report.splits_constants = false;
      report.counterexample = "mean(const " + rat_to_string(c) + ") != " + rat_to_string(c);
    }
  }
  return report;
}

}  // namespace barq
