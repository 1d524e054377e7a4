#include "barq/rng.hpp"

#include <stdexcept>

namespace barq {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("uniform: empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next() % span);
}

std::vector<Rat> Rng::table(std::size_t size, int range) {
  std::vector<Rat> t;
  t.reserve(size);
  for (std::size_t i = 0; i < size; ++i) t.emplace_back(small_rational(range));
  return t;
}

const std::vector<PLMap>& fprime_builtin_generators() {
  static const std::vector<PLMap> gens = [] {
    const PLMap f = builtin_f();
    const PLMap g = builtin_g();
    const PLMap id = PLMap::identity();
    return std::vector<PLMap>{f,
                              g,
                              star_product(f, id),
                              star_product(g, id),
                              star_product(id, f),
                              star_product(id, g)};
  }();
  return gens;
}

PLMap random_fprime_word(Rng& rng, int max_len) {
  const auto& gens = fprime_builtin_generators();
  const std::int64_t len = rng.uniform(0, max_len);
  PLMap w = PLMap::identity();
  for (std::int64_t i = 0; i < len; ++i) {
    const auto pick = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(gens.size()) - 1));
    const bool inv = rng.uniform(0, 1) == 1;
    w = compose(w, inv ? invert(gens[pick]) : gens[pick]);
  }
  return w;
}

ZVec random_zvec(Rng& rng, int rank, int range) {
  ZVec v(static_cast<std::size_t>(rank));
  for (auto& c : v) c = rng.uniform(-range, range);
  return v;
}

Element random_element(Rng& rng, const Group& group, int word_len) {
  switch (group.kind()) {
    case Group::Kind::cyclic:
    case Group::Kind::symmetric: {
      const auto i = static_cast<std::size_t>(
          rng.uniform(0, static_cast<std::int64_t>(group.order()) - 1));
      return group.elements()[i];
    }
    case Group::Kind::free_abelian: {
      const auto rank = std::get<ZVec>(group.identity()).size();
      return random_zvec(rng, static_cast<int>(rank));
    }
    case Group::Kind::fprime: return random_fprime_word(rng, word_len);
  }
  throw std::logic_error("unreachable");
}

}  // namespace barq
