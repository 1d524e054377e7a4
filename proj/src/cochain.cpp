#include "barq/cochain.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace barq {

std::size_t tuple_space_size(const Group& group, int arity) {
  if (arity < 0) throw std::invalid_argument("negative arity");
  std::size_t n = 1;
  for (int i = 0; i < arity; ++i) n *= group.order();
  return n;
}

Tuple tuple_from_index(const Group& group, int arity, std::size_t index) {
  const auto& elts = group.elements();
  Tuple t(static_cast<std::size_t>(arity));
  for (int k = arity - 1; k >= 0; --k) {
    t[static_cast<std::size_t>(k)] = elts[index % elts.size()];
    index /= elts.size();
  }
  return t;
}

struct Cochain::Memo {
  std::mutex mutex;
  std::unordered_map<Tuple, Rat, TupleHash> cache;
};

Cochain::Cochain(int degree, Evaluator eval)
    : degree_(degree), eval_(std::make_shared<Evaluator>(std::move(eval))) {
  if (degree < 0) throw std::invalid_argument("cochain degree must be >= 0");
}

Cochain Cochain::constant(Rat value) {
  return Cochain(0, [v = std::move(value)](const Tuple&) { return v; });
}

Cochain Cochain::from_table(Group group, int degree, std::vector<Rat> values) {
  if (!group.is_finite())
    throw std::invalid_argument("from_table needs a finite group, got " + group.name());
  if (values.size() != tuple_space_size(group, degree))
    throw std::invalid_argument("table size mismatch: expected " +
                                std::to_string(tuple_space_size(group, degree)) + ", got " +
                                std::to_string(values.size()));
  auto shared = std::make_shared<std::vector<Rat>>(std::move(values));
  return Cochain(degree, [group, shared](const Tuple& t) -> Rat {
    std::size_t index = 0;
    for (const Element& e : t) index = index * group.order() + group.index_of(e);
    return (*shared)[index];
  });
}

Rat Cochain::operator()(const Tuple& args) const {
  if (static_cast<int>(args.size()) != degree_)
    throw std::invalid_argument("cochain of degree " + std::to_string(degree_) + " applied to " +
                                std::to_string(args.size()) + " arguments");
  if (!memo_) return (*eval_)(args);
  std::lock_guard<std::mutex> lock(memo_->mutex);
  auto it = memo_->cache.find(args);
  if (it != memo_->cache.end()) return it->second;
  Rat v = (*eval_)(args);
  memo_->cache.emplace(args, v);
  return v;
}

Cochain Cochain::memoized() const {
  Cochain c = *this;
  c.memo_ = std::make_shared<Memo>();
  return c;
}

Cochain codifferential(const Cochain& w, const Group& group) {
  const int n = w.degree();
  return Cochain(n + 1, [w, group, n](const Tuple& t) -> Rat {
    Tuple sub(t.begin() + 1, t.end());  // drop first
    Rat acc = w(sub);
    int sign = -1;
    // sub currently equals (g_2,...,g_{n+1}); rewrite it in place into the
    // successive merged tuples (g_1,...,g_i g_{i+1},...).
    for (int i = 0; i < n; ++i) {
      const auto k = static_cast<std::size_t>(i);
      sub[k] = group.multiply(t[k], t[k + 1]);
      if (i > 0) sub[k - 1] = t[k - 1];
      Rat term = w(sub);
      if (sign < 0)
        acc -= term;
      else
        acc += term;
      sign = -sign;
    }
    Tuple head(t.begin(), t.end() - 1);  // drop last
    Rat term = w(head);
    if (sign < 0)
      acc -= term;
    else
      acc += term;
    return acc;
  });
}

Cochain cup(const Cochain& a, const Cochain& b) {
  const int p = a.degree(), q = b.degree();
  return Cochain(p + q, [a, b, p, q](const Tuple& t) -> Rat {
    Tuple left(t.begin(), t.begin() + p);
    Tuple right(t.begin() + p, t.begin() + p + q);
    return a(left) * b(right);
  });
}

Cochain pullback(const Cochain& w, const Homomorphism& psi) {
  return Cochain(w.degree(), [w, psi](const Tuple& t) -> Rat {
    Tuple mapped;
    mapped.reserve(t.size());
    for (const Element& e : t) mapped.push_back(psi.apply(e));
    return w(mapped);
  });
}

Cochain hat_involution(const Cochain& w, const Group& group) {
  const int n = w.degree();
  const bool negate = ((n * (n + 1) / 2) % 2) != 0;
  return Cochain(n, [w, group, negate](const Tuple& t) -> Rat {
    Tuple rev;
    rev.reserve(t.size());
    for (auto it = t.rbegin(); it != t.rend(); ++it) rev.push_back(group.invert(*it));
    Rat v = w(rev);
    return negate ? Rat(-v) : v;
  });
}

Cochain materialize(const Cochain& w, const Group& group) {
  const std::size_t n = tuple_space_size(group, w.degree());
  std::vector<Rat> values(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    const auto idx = static_cast<std::size_t>(i);
    values[idx] = w(tuple_from_index(group, w.degree(), idx));
  }
  return Cochain::from_table(group, w.degree(), std::move(values));
}

Chain::Chain(Group group, int degree, std::vector<Term> terms)
    : group_(std::move(group)), degree_(degree) {
  std::unordered_map<Tuple, std::int64_t, TupleHash> merged;
  std::vector<Tuple> order;
  for (Term& t : terms) {
    if (static_cast<int>(t.tuple.size()) != degree_)
      throw std::invalid_argument("chain term arity mismatch");
    auto [it, inserted] = merged.try_emplace(t.tuple, 0);
    if (inserted) order.push_back(t.tuple);
    it->second += t.coeff;
  }
  for (Tuple& t : order) {
    const std::int64_t c = merged.at(t);
    if (c != 0) terms_.push_back({c, std::move(t)});
  }
}

Chain zeta_cycle(int two_n) {
  if (two_n < 2 || two_n % 2 != 0 || two_n > 8)
    throw std::invalid_argument(
        "zeta_cycle is defined for even degree 2..8; degree " + std::to_string(two_n) +
        " would have (" + std::to_string(two_n) + ")! terms, past the desk-scale cap of 8! = 40320");
  const Group zd = Group::free_abelian(two_n);
  const auto d = static_cast<std::size_t>(two_n);
  std::vector<Element> basis;
  for (std::size_t i = 0; i < d; ++i) {
    ZVec e(d, 0);
    e[i] = 1;
    basis.emplace_back(std::move(e));
  }
  std::vector<std::size_t> perm(d);
  for (std::size_t i = 0; i < d; ++i) perm[i] = i;
  std::vector<Chain::Term> terms;
  do {
    // Parity by counting inversions.
    int inversions = 0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Tuple t;
    t.reserve(d);
    for (std::size_t i = 0; i < d; ++i) t.push_back(basis[perm[i]]);
    terms.push_back({(inversions % 2 == 0) ? 1 : -1, std::move(t)});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Chain(zd, two_n, std::move(terms));
}

Rat pair_chain(const Cochain& w, const Chain& c, par::Mode mode) {
  if (w.degree() != c.degree())
    throw std::invalid_argument("pairing degree mismatch: cochain " + std::to_string(w.degree()) +
                                " vs chain " + std::to_string(c.degree()));
  const auto& terms = c.terms();
  return par::sum(
      terms.size(),
      [&](std::size_t i) -> Rat { return Rat(terms[i].coeff) * w(terms[i].tuple); }, mode);
}

namespace {

Rat probe_tuple_value(const Cochain& w, const Tuple& head, const Tuple& tail) {
  Tuple full = head;
  full.insert(full.end(), tail.begin(), tail.end());
  return rat_abs(w(full));
}

}  // namespace

ProbeResult probe_p_bounded(const Cochain& w, int p, const Tuple& tail,
                            const std::vector<Tuple>& samples) {
  if (p < 0 || p + static_cast<int>(tail.size()) != w.degree())
    throw std::invalid_argument("probe: p + |tail| must equal the cochain degree");
  for (const Tuple& s : samples)
    if (static_cast<int>(s.size()) != p)
      throw std::invalid_argument("probe: sample arity mismatch");
  Rat best = par::max(samples.size(), [&](std::size_t i) -> Rat {
    return probe_tuple_value(w, samples[i], tail);
  });
  return ProbeResult{best, false, samples.size()};
}

ProbeResult probe_p_bounded_all(const Cochain& w, int p, const Tuple& tail, const Group& group) {
  if (p < 0 || p + static_cast<int>(tail.size()) != w.degree())
    throw std::invalid_argument("probe: p + |tail| must equal the cochain degree");
  const std::size_t n = tuple_space_size(group, p);
  Rat best = par::max(n, [&](std::size_t i) -> Rat {
    return probe_tuple_value(w, tuple_from_index(group, p, i), tail);
  });
  return ProbeResult{best, true, n};
}

}  // namespace barq
