#pragma once

#include "barq/group.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace barq {

// Deterministic seeded randomness.  mt19937_64 output is fixed by the C++
// standard, so a seed reproduces the same draws on every platform; draws are
// made serially so results do not depend on the worker thread count.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform-ish integer in [lo, hi] via modulo (bias is irrelevant for test
  // data and the draw sequence stays platform-independent).
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  // Small integer-valued rational in [-range, range].
  Rat small_rational(int range = 9) { return Rat(uniform(-range, range)); }

  // Dense random table with entries in [-range, range].
  std::vector<Rat> table(std::size_t size, int range = 9);

 private:
  std::mt19937_64 gen_;
};

// The built-in generating set used for random words in F': f, g and their
// half-interval star embeddings.
const std::vector<PLMap>& fprime_builtin_generators();

// Word of length <= max_len in the built-in generators and their inverses.
PLMap random_fprime_word(Rng& rng, int max_len);

ZVec random_zvec(Rng& rng, int rank, int range = 4);

// Random element: uniform on finite backends, a random vector on free abelian
// groups, and a random built-in word on F'.
Element random_element(Rng& rng, const Group& group, int word_len = 6);

}  // namespace barq
