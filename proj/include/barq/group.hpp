#pragma once

#include "barq/plmap.hpp"
#include "barq/rational.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace barq {

// One value type covers every backend so cochains, tuples and memo keys can be
// handled uniformly at runtime (the CLI selects groups by name).
using CyclicElt = std::int64_t;  // residue in [0, n)
struct PermElt {                 // image list, padded with fixed points to 4
  std::array<std::uint8_t, 4> img{0, 1, 2, 3};
  bool operator==(const PermElt& o) const { return img == o.img; }
};
using ZVec = std::vector<std::int64_t>;  // free abelian coordinates

using Element = std::variant<CyclicElt, PermElt, ZVec, PLMap>;

struct ElementHash {
  std::size_t operator()(const Element& e) const;
};

class Group {
 public:
  enum class Kind { cyclic, symmetric, free_abelian, fprime };

  static Group cyclic(std::int64_t n);
  static Group symmetric(int n);  // n <= 4: keeps exhaustive degree-3 scans tractable
  static Group free_abelian(int rank);
  static Group fprime();
  // Names as accepted on the command line: "c<n>", "s<n>", "z<d>", "fprime".
  static Group parse(const std::string& name);

  Kind kind() const;
  std::string name() const;
  bool is_finite() const;
  std::size_t order() const;                     // finite backends only
  const std::vector<Element>& elements() const;  // finite backends only; identity first
  std::size_t index_of(const Element& e) const;  // finite backends only

  Element identity() const;
  Element multiply(const Element& a, const Element& b) const;
  Element invert(const Element& a) const;
  Element power(const Element& a, std::int64_t n) const;

  std::string element_str(const Element& e) const;

  bool operator==(const Group& o) const;

  struct Impl;  // backend data; defined in group.cpp

 private:
  explicit Group(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

// Uniform averaging over a finite group; the only invariant mean exposed.
// average is linear and bi-invariant (h -> hg and h -> gh are bijections).
class Mean {
 public:
  explicit Mean(Group group);  // throws std::invalid_argument on infinite backends
  const Group& group() const { return group_; }
  Rat average(const std::function<Rat(const Element&)>& f) const;

 private:
  Group group_;
};

class Homomorphism {
 public:
  // Free abelian source; images must pairwise commute in the target (checked
  // exactly; the offending pair is reported).  e_i maps to images[i].
  static Homomorphism from_generators(Group source, std::vector<Element> images, Group target);
  static Homomorphism identity(Group group);
  // c_m -> c_n reduction x -> x mod n; requires n | m (else not a homomorphism).
  static Homomorphism cyclic_reduction(Group source, Group target);

  const Group& source() const { return source_; }
  const Group& target() const { return target_; }
  Element apply(const Element& e) const { return map_(e); }

 private:
  Homomorphism(Group s, Group t, std::function<Element(const Element&)> m)
      : source_(std::move(s)), target_(std::move(t)), map_(std::move(m)) {}
  Group source_, target_;
  std::function<Element(const Element&)> map_;
};

}  // namespace barq
