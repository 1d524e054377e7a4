#pragma once

#include "barq/cochain.hpp"
#include "barq/group.hpp"

#include <functional>
#include <vector>

namespace barq {

// A function Gamma -> Q on a finite group, the coefficient module for the
// contracting operators.  The left module structure is (h.F)(g) = F(gh).
// Values are indexed by the group's enumeration order.
class LinfElement {
 public:
  LinfElement(Group group, std::vector<Rat> values);
  static LinfElement constant(const Group& group, const Rat& c);
  static LinfElement from_function(const Group& group, const std::function<Rat(const Element&)>& f);

  const Group& group() const { return group_; }
  const std::vector<Rat>& values() const { return values_; }
  const Rat& at(const Element& g) const { return values_[group_.index_of(g)]; }
  const Rat& at_identity() const { return values_[group_.index_of(group_.identity())]; }

  // (h.F)(g) = F(gh).
  LinfElement acted_by(const Element& h) const;
  // Canonical section of the quotient by constants: subtract the value at the
  // identity, so the class of F is represented by the unique representative
  // vanishing at 1.
  LinfElement normalized_at_identity() const;

  bool is_constant() const;
  Rat oscillation() const;  // max - min, the sup metric to the constants (up to 2)

  LinfElement operator+(const LinfElement& o) const;
  LinfElement operator-(const LinfElement& o) const;
  LinfElement operator-() const;
  bool operator==(const LinfElement& o) const { return values_ == o.values_; }

 private:
  Group group_;
  std::vector<Rat> values_;
};

enum class ModuleCoeff {
  linf,        // values in linf(Gamma)
  linf_mod_r,  // values in linf(Gamma)/R, represented by the normalized section
};

// A cochain with values in the module; for linf_mod_r the evaluator's output
// is always the normalized representative.
class ModuleCochain {
 public:
  using Evaluator = std::function<LinfElement(const Tuple&)>;

  ModuleCochain(Group group, int degree, ModuleCoeff coeff, Evaluator eval);

  const Group& group() const { return group_; }
  int degree() const { return degree_; }
  ModuleCoeff coeff() const { return coeff_; }
  LinfElement operator()(const Tuple& args) const;

 private:
  Group group_;
  int degree_;
  ModuleCoeff coeff_;
  std::shared_ptr<const Evaluator> eval_;
};

// Codifferential with module coefficients: the drop-first term carries the
// action,
//   (d eta)(g_1,...,g_{n+1}) = g_1 . eta(g_2,...,g_{n+1})
//                            + sum_{i} (-1)^i eta(...,g_i g_{i+1},...)
//                            + (-1)^{n+1} eta(g_1,...,g_n),
// so for a degree-0 eta with value F it is (d F)(g) = g.F - F.  For quotient
// coefficients the result is renormalized, which is the codifferential of the
// quotient module because normalization is linear and commutes with the
// induced action.
ModuleCochain module_codifferential(const ModuleCochain& eta);

// Dense re-tabulation (evaluates every tuple once).
ModuleCochain module_materialize(const ModuleCochain& eta);

}  // namespace barq
