#include "barq/linf.hpp"

#include <stdexcept>

namespace barq {

LinfElement::LinfElement(Group group, std::vector<Rat> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != group_.order())
    throw std::invalid_argument("linf element needs one value per group element");
}

LinfElement LinfElement::constant(const Group& group, const Rat& c) {
  return LinfElement(group, std::vector<Rat>(group.order(), c));
}

LinfElement LinfElement::from_function(const Group& group,
                                       const std::function<Rat(const Element&)>& f) {
  std::vector<Rat> v;
  v.reserve(group.order());
  for (const Element& g : group.elements()) v.push_back(f(g));
  return LinfElement(group, std::move(v));
}

LinfElement LinfElement::acted_by(const Element& h) const {
  const auto& elts = group_.elements();
  std::vector<Rat> v(values_.size());
  for (std::size_t i = 0; i < elts.size(); ++i)
    v[i] = values_[group_.index_of(group_.multiply(elts[i], h))];
  return LinfElement(group_, std::move(v));
}

LinfElement LinfElement::normalized_at_identity() const {
  const Rat base = at_identity();
  std::vector<Rat> v(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) v[i] = values_[i] - base;
  return LinfElement(group_, std::move(v));
}

bool LinfElement::is_constant() const {
  for (const Rat& v : values_)
    if (v != values_.front()) return false;
  return true;
}

Rat LinfElement::oscillation() const {
  Rat lo = values_.front(), hi = values_.front();
  for (const Rat& v : values_) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  return hi - lo;
}

LinfElement LinfElement::operator+(const LinfElement& o) const {
  std::vector<Rat> v(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) v[i] = values_[i] + o.values_[i];
  return LinfElement(group_, std::move(v));
}

LinfElement LinfElement::operator-(const LinfElement& o) const {
  std::vector<Rat> v(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) v[i] = values_[i] - o.values_[i];
  return LinfElement(group_, std::move(v));
}

LinfElement LinfElement::operator-() const {
  std::vector<Rat> v(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) v[i] = -values_[i];
  return LinfElement(group_, std::move(v));
}

ModuleCochain::ModuleCochain(Group group, int degree, ModuleCoeff coeff, Evaluator eval)
    : group_(std::move(group)),
      degree_(degree),
      coeff_(coeff),
      eval_(std::make_shared<const Evaluator>(std::move(eval))) {
  if (degree < 0) throw std::invalid_argument("module cochain degree must be >= 0");
  if (!group_.is_finite())
    throw std::invalid_argument("module coefficients are tabulated; the group must be finite");
}

LinfElement ModuleCochain::operator()(const Tuple& args) const {
  if (static_cast<int>(args.size()) != degree_)
    throw std::invalid_argument("module cochain of degree " + std::to_string(degree_) +
                                " applied to " + std::to_string(args.size()) + " arguments");
  return (*eval_)(args);
}

ModuleCochain module_codifferential(const ModuleCochain& eta) {
  const int n = eta.degree();
  const Group group = eta.group();
  const ModuleCoeff coeff = eta.coeff();
  return ModuleCochain(
      group, n + 1, coeff, [eta, group, n, coeff](const Tuple& t) -> LinfElement {
        Tuple sub(t.begin() + 1, t.end());
        LinfElement acc = eta(sub).acted_by(t[0]);
        int sign = -1;
        for (int i = 0; i < n; ++i) {
          const auto k = static_cast<std::size_t>(i);
          sub[k] = group.multiply(t[k], t[k + 1]);
          if (i > 0) sub[k - 1] = t[k - 1];
          const LinfElement term = eta(sub);
          acc = (sign < 0) ? acc - term : acc + term;
          sign = -sign;
        }
        Tuple head(t.begin(), t.end() - 1);
        const LinfElement term = eta(head);
        acc = (sign < 0) ? acc - term : acc + term;
        return coeff == ModuleCoeff::linf_mod_r ? acc.normalized_at_identity() : acc;
      });
}

ModuleCochain module_materialize(const ModuleCochain& eta) {
  const Group group = eta.group();
  const std::size_t n = tuple_space_size(group, eta.degree());
  auto table = std::make_shared<std::vector<LinfElement>>();
  table->reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    table->push_back(eta(tuple_from_index(group, eta.degree(), i)));
  const int degree = eta.degree();
  return ModuleCochain(group, degree, eta.coeff(),
                       [group, table](const Tuple& t) -> LinfElement {
                         std::size_t index = 0;
                         for (const Element& e : t)
                           index = index * group.order() + group.index_of(e);
                         return (*table)[index];
                       });
}

}  // namespace barq
