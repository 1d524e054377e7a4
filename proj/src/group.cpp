#include "barq/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace barq {

std::size_t ElementHash::operator()(const Element& e) const {
  return std::visit(
      [](const auto& v) -> std::size_t {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, CyclicElt>) {
          return hash_combine(0xc1, static_cast<std::size_t>(v));
        } else if constexpr (std::is_same_v<T, PermElt>) {
          std::size_t h = 0x51;
          for (auto i : v.img) h = hash_combine(h, i);
          return h;
        } else if constexpr (std::is_same_v<T, ZVec>) {
          std::size_t h = 0x2d;
          for (auto c : v) h = hash_combine(h, static_cast<std::size_t>(c));
          return h;
        } else {
          return hash_combine(0xf7, v.hash());
        }
      },
      e);
}

struct Group::Impl {
  Kind kind;
  std::int64_t param = 0;  // n for cyclic/symmetric, rank for free abelian
  std::vector<Element> elements;
  std::unordered_map<Element, std::size_t, ElementHash> index;
};

namespace {

std::shared_ptr<const Group::Impl> make_impl(Group::Kind kind, std::int64_t param,
                                             std::vector<Element> elements) {
  auto impl = std::make_shared<Group::Impl>();
  impl->kind = kind;
  impl->param = param;
  impl->elements = std::move(elements);
  for (std::size_t i = 0; i < impl->elements.size(); ++i) impl->index.emplace(impl->elements[i], i);
  return impl;
}

}  // namespace

Group Group::cyclic(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be >= 1");
  std::vector<Element> elts;
  elts.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) elts.emplace_back(CyclicElt{i});
  return Group(make_impl(Kind::cyclic, n, std::move(elts)));
}

Group Group::symmetric(int n) {
  if (n < 1 || n > 4)
    throw std::invalid_argument(
        "symmetric backend supports n in [1,4]; larger n makes the exhaustive "
        "degree-3 identity scans (order^4 evaluations) intractable at desk scale");
  std::array<std::uint8_t, 4> base{0, 1, 2, 3};
  std::vector<Element> elts;
  std::vector<std::uint8_t> head(base.begin(), base.begin() + n);
  do {
    PermElt p;
    std::copy(head.begin(), head.end(), p.img.begin());
    elts.emplace_back(p);
  } while (std::next_permutation(head.begin(), head.end()));
  std::sort(elts.begin(), elts.end(), [](const Element& a, const Element& b) {
    return std::get<PermElt>(a).img < std::get<PermElt>(b).img;
  });
  return Group(make_impl(Kind::symmetric, n, std::move(elts)));
}

Group Group::free_abelian(int rank) {
  if (rank < 1) throw std::invalid_argument("free abelian rank must be >= 1");
  return Group(make_impl(Kind::free_abelian, rank, {}));
}

Group Group::fprime() { return Group(make_impl(Kind::fprime, 0, {})); }

Group Group::parse(const std::string& name) {
  if (name == "fprime") return fprime();
  if (name.size() >= 2 && (name[0] == 'c' || name[0] == 's' || name[0] == 'z')) {
    const std::string digits = name.substr(1);
    if (digits.find_first_not_of("0123456789") == std::string::npos && !digits.empty()) {
      const long n = std::stol(digits);
      if (name[0] == 'c') return cyclic(n);
      if (name[0] == 's') return symmetric(static_cast<int>(n));
      return free_abelian(static_cast<int>(n));
    }
  }
  throw std::invalid_argument("unknown group name '" + name +
                              "' (expected c<n>, s<n>, z<d>, or fprime)");
}

Group::Kind Group::kind() const { return impl_->kind; }

std::string Group::name() const {
  switch (impl_->kind) {
    case Kind::cyclic: return "c" + std::to_string(impl_->param);
    case Kind::symmetric: return "s" + std::to_string(impl_->param);
    case Kind::free_abelian: return "z" + std::to_string(impl_->param);
    case Kind::fprime: return "fprime";
  }
  return "?";
}

bool Group::is_finite() const {
  return impl_->kind == Kind::cyclic || impl_->kind == Kind::symmetric;
}

std::size_t Group::order() const {
  if (!is_finite()) throw std::invalid_argument("order(): " + name() + " is infinite");
  return impl_->elements.size();
}

const std::vector<Element>& Group::elements() const {
  if (!is_finite())
    throw std::invalid_argument("elements(): cannot enumerate infinite group " + name());
  return impl_->elements;
}

std::size_t Group::index_of(const Element& e) const {
  if (!is_finite())
    throw std::invalid_argument("index_of(): cannot index infinite group " + name());
  const auto it = impl_->index.find(e);
  if (it == impl_->index.end())
    throw std::invalid_argument("index_of(): element not in " + name() + ": " + element_str(e));
  return it->second;
}

Element Group::identity() const {
  switch (impl_->kind) {
    case Kind::cyclic: return CyclicElt{0};
    case Kind::symmetric: return PermElt{};
    case Kind::free_abelian: return ZVec(static_cast<std::size_t>(impl_->param), 0);
    case Kind::fprime: return PLMap::identity();
  }
  throw std::logic_error("unreachable");
}

Element Group::multiply(const Element& a, const Element& b) const {
  switch (impl_->kind) {
    case Kind::cyclic: {
      return CyclicElt{(std::get<CyclicElt>(a) + std::get<CyclicElt>(b)) % impl_->param};
    }
    case Kind::symmetric: {
      const auto& pa = std::get<PermElt>(a).img;
      const auto& pb = std::get<PermElt>(b).img;
      PermElt r;
      for (int i = 0; i < 4; ++i) r.img[static_cast<std::size_t>(i)] = pa[pb[static_cast<std::size_t>(i)]];
      return r;
    }
    case Kind::free_abelian: {
      const auto& va = std::get<ZVec>(a);
      const auto& vb = std::get<ZVec>(b);
      ZVec r(va.size());
      for (std::size_t i = 0; i < va.size(); ++i) r[i] = va[i] + vb[i];
      return r;
    }
    case Kind::fprime: return compose(std::get<PLMap>(a), std::get<PLMap>(b));
  }
  throw std::logic_error("unreachable");
}

Element Group::invert(const Element& a) const {
  switch (impl_->kind) {
    case Kind::cyclic: {
      const CyclicElt v = std::get<CyclicElt>(a);
      return CyclicElt{v == 0 ? 0 : impl_->param - v};
    }
    case Kind::symmetric: {
      const auto& pa = std::get<PermElt>(a).img;
      PermElt r;
      for (std::size_t i = 0; i < 4; ++i) r.img[pa[i]] = static_cast<std::uint8_t>(i);
      return r;
    }
    case Kind::free_abelian: {
      ZVec r = std::get<ZVec>(a);
      for (auto& c : r) c = -c;
      return r;
    }
    case Kind::fprime: return barq::invert(std::get<PLMap>(a));
  }
  throw std::logic_error("unreachable");
}

Element Group::power(const Element& a, std::int64_t n) const {
  Element base = n < 0 ? invert(a) : a;
  std::uint64_t k =
      n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  Element acc = identity();
  while (k > 0) {
    if (k & 1) acc = multiply(acc, base);
    k >>= 1;
    if (k > 0) base = multiply(base, base);
  }
  return acc;
}

std::string Group::element_str(const Element& e) const {
  switch (impl_->kind) {
    case Kind::cyclic: return std::to_string(std::get<CyclicElt>(e));
    case Kind::symmetric: {
      const auto& img = std::get<PermElt>(e).img;
      std::string s = "[";
      for (std::int64_t i = 0; i < impl_->param; ++i) {
        if (i) s += " ";
        s += std::to_string(img[static_cast<std::size_t>(i)]);
      }
      return s + "]";
    }
    case Kind::free_abelian: {
      const auto& v = std::get<ZVec>(e);
      std::string s = "(";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
      }
      return s + ")";
    }
    case Kind::fprime: return std::get<PLMap>(e).str();
  }
  return "?";
}

bool Group::operator==(const Group& o) const {
  return impl_->kind == o.impl_->kind && impl_->param == o.impl_->param;
}

Mean::Mean(Group group) : group_(std::move(group)) {
  if (!group_.is_finite())
    throw std::invalid_argument("uniform mean needs a finite group, got " + group_.name());
}

Rat Mean::average(const std::function<Rat(const Element&)>& f) const {
  Rat sum(0);
  for (const Element& h : group_.elements()) sum += f(h);
  Rat r = sum / Rat(static_cast<unsigned long>(group_.order()));
  r.canonicalize();
  return r;
}

Homomorphism Homomorphism::from_generators(Group source, std::vector<Element> images,
                                           Group target) {
  if (source.kind() != Group::Kind::free_abelian)
    throw std::invalid_argument("from_generators: source must be a free abelian group");
  const auto rank = static_cast<std::size_t>(std::get<ZVec>(source.identity()).size());
  if (images.size() != rank)
    throw std::invalid_argument("from_generators: expected " + std::to_string(rank) +
                                " images, got " + std::to_string(images.size()));
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j)
      if (!(target.multiply(images[i], images[j]) == target.multiply(images[j], images[i])))
        throw std::invalid_argument(
            "from_generators: images " + std::to_string(i) + " and " + std::to_string(j) +
            " do not commute; no homomorphism from " + source.name() + " exists");
  auto shared = std::make_shared<std::vector<Element>>(std::move(images));
  auto map = [source, target, shared](const Element& e) -> Element {
    const auto& v = std::get<ZVec>(e);
    Element acc = target.identity();
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) acc = target.multiply(acc, target.power((*shared)[i], v[i]));
    return acc;
  };
  return Homomorphism(std::move(source), std::move(target), std::move(map));
}

Homomorphism Homomorphism::identity(Group group) {
  Group copy = group;
  return Homomorphism(group, copy, [](const Element& e) { return e; });
}

Homomorphism Homomorphism::cyclic_reduction(Group source, Group target) {
  if (source.kind() != Group::Kind::cyclic || target.kind() != Group::Kind::cyclic)
    throw std::invalid_argument("cyclic_reduction needs cyclic source and target");
  const auto m = static_cast<std::int64_t>(source.order());
  const auto n = static_cast<std::int64_t>(target.order());
  if (m % n != 0)
    throw std::invalid_argument("cyclic_reduction: " + std::to_string(n) +
                                " does not divide " + std::to_string(m));
  return Homomorphism(std::move(source), std::move(target), [n](const Element& e) -> Element {
    return CyclicElt{std::get<CyclicElt>(e) % n};
  });
}

}  // namespace barq
