#pragma once

#include "barq/group.hpp"
#include "barq/parallel.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

namespace barq {

// An n-tuple of group elements; a degree-n cochain consumes one of these.
using Tuple = std::vector<Element>;

struct TupleHash {
  std::size_t operator()(const Tuple& t) const {
    std::size_t h = t.size();
    ElementHash eh;
    for (const Element& e : t) h = hash_combine(h, eh(e));
    return h;
  }
};

// Mixed-radix tuple indexing for exhaustive scans over finite groups:
// index = sum_k idx_k * order^(arity-1-k), i.e. row-major, leftmost slot most
// significant.  Scans that report the minimal failing index therefore report a
// deterministic counterexample.
std::size_t tuple_space_size(const Group& group, int arity);
Tuple tuple_from_index(const Group& group, int arity, std::size_t index);

// Inhomogeneous bar cochain with values in Q.  Value-semantic and cheap to
// copy (the evaluator and memo cache are shared).  Evaluation must be pure:
// with memoization on, concurrent fills of one key must agree, which holds
// because evaluators are deterministic functions of the tuple.
class Cochain {
 public:
  using Evaluator = std::function<Rat(const Tuple&)>;

  Cochain(int degree, Evaluator eval);
  static Cochain constant(Rat value);  // degree 0
  // Dense table over a finite group, row-major in the element indices.
  static Cochain from_table(Group group, int degree, std::vector<Rat> values);

  int degree() const { return degree_; }
  Rat operator()(const Tuple& args) const;

  // Same cochain with a shared thread-safe memo cache in front.
  Cochain memoized() const;

 private:
  struct Memo;
  int degree_;
  std::shared_ptr<const Evaluator> eval_;
  std::shared_ptr<Memo> memo_;
};

// The codifferential, trivial Q coefficients:
//   (dw)(g_1,...,g_{n+1}) = w(g_2,...,g_{n+1})
//                         + sum_{i=1..n} (-1)^i w(g_1,...,g_i g_{i+1},...,g_{n+1})
//                         + (-1)^{n+1} w(g_1,...,g_n).
// Degree-0 convention: the same formula with no merge terms gives
// (dc)(g) = c - c = 0 for a constant c, which is the convention that makes
// dd = 0 hold uniformly (for module coefficients the leading term instead
// carries the action; see module_codifferential).
Cochain codifferential(const Cochain& w, const Group& group);

// Cup product on inhomogeneous cochains:
// (a ^ b)(g_1,...,g_{p+q}) = a(g_1,...,g_p) * b(g_{p+1},...,g_{p+q}).
// Satisfies d(a^b) = da^b + (-1)^p a^db (Leibniz) and is associative.
Cochain cup(const Cochain& a, const Cochain& b);

// (psi^* w)(g_1,...,g_n) = w(psi g_1, ..., psi g_n); commutes with d.
Cochain pullback(const Cochain& w, const Homomorphism& psi);

// The involution w -> (sign) w(g_n^{-1},...,g_1^{-1}) with
// sign = (-1)^{n(n+1)/2}.  The sign is what makes this a chain map in every
// degree: the bare reversal satisfies d(rev w) = (-1)^{n+1} rev(dw), so it
// anticommutes with d in even degrees, and the alternating sign absorbs
// exactly that factor.  Still an involution, and it swaps boundedness in the
// first p slots with boundedness in the last p slots.
Cochain hat_involution(const Cochain& w, const Group& group);

// Dense re-tabulation over a finite group (evaluates w on every tuple once).
Cochain materialize(const Cochain& w, const Group& group);

// Formal Z-linear combination of tuples.  Terms are merged and zero terms
// dropped, so equality of chains is equality of normalized term lists.
class Chain {
 public:
  struct Term {
    std::int64_t coeff;
    Tuple tuple;
  };

  Chain(Group group, int degree, std::vector<Term> terms);
  const Group& group() const { return group_; }
  int degree() const { return degree_; }
  const std::vector<Term>& terms() const { return terms_; }

 private:
  Group group_;
  int degree_;
  std::vector<Term> terms_;
};

// zeta_{2n} = sum over permutations s of (sgn s)(e_{s(1)} | ... | e_{s(2n)}),
// a degree-2n chain over Z^{2n} with (2n)! unit-coefficient terms.
// Capped at 2n <= 8: the term count is (2n)!, so 10 would already be
// 3,628,800 tuples of length 10.
Chain zeta_cycle(int two_n);

// <w, c> = sum over terms of coeff * w(tuple), exact.
Rat pair_chain(const Cochain& w, const Chain& c, par::Mode mode = par::Mode::parallel);

struct ProbeResult {
  Rat max_abs;              // max |w(sample, tail)| seen
  bool exact;               // true when the whole tuple space was scanned
  std::size_t sample_count;
};

// Reported bound on |w| over p-tuples with a fixed tail: exact sup on finite
// groups (probe_p_bounded_all), a lower-bound certificate otherwise.  Never
// claims boundedness on an infinite group.
ProbeResult probe_p_bounded(const Cochain& w, int p, const Tuple& tail,
                            const std::vector<Tuple>& samples);
ProbeResult probe_p_bounded_all(const Cochain& w, int p, const Tuple& tail, const Group& group);

}  // namespace barq
