#include "barq/rational.hpp"

#include <stdexcept>

namespace barq {

std::string rat_to_string(const Rat& q) { return q.get_str(); }

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + s);
  if (sgn(q.get_den()) <= 0 && q.get_den() != 0) q = Rat(-q.get_num(), -q.get_den());
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::size_t hash_combine(std::size_t seed, std::size_t value) {
  // boost::hash_combine mixing constant, 64-bit variant.
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_mpz(const mpz_class& z) {
  const mpz_srcptr p = z.get_mpz_t();
  std::size_t h = mpz_sgn(p) < 0 ? 0x5bd1e995u : 0u;
  const std::size_t limbs = mpz_size(p);
  for (std::size_t i = 0; i < limbs; ++i)
    h = hash_combine(h, static_cast<std::size_t>(mpz_getlimbn(p, static_cast<mp_size_t>(i))));
  return h;
}

}  // namespace barq
