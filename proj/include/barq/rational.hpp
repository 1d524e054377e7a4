#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>

namespace barq {

// All cochain values are exact rationals.  mpq_class keeps itself in lowest
// terms, so equality is structural equality.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat_abs(const Rat& q) { return sgn(q) < 0 ? Rat(-q) : q; }

// Canonical decimal rendering: "p" for integers, "p/q" otherwise.
std::string rat_to_string(const Rat& q);

// Accepts "p" or "p/q" with optional leading '-'.  Throws std::invalid_argument.
Rat rat_from_string(const std::string& s);

std::size_t hash_combine(std::size_t seed, std::size_t value);
std::size_t hash_mpz(const mpz_class& z);

}  // namespace barq
