#pragma once

#include "barq/rational.hpp"

#include <compare>
#include <cstdint>
#include <string>

namespace barq {

// Exact dyadic rational m / 2^k.  Canonical form: k >= 0, and k > 0 implies m
// is odd; the value 0 is stored as 0 / 2^0.  With that normalization two
// dyadics are equal iff their representations are equal, which is what makes
// piecewise-linear map equality (and hashing) structural.
class Dyadic {
 public:
  Dyadic() : mantissa_(0), exponent_(0) {}
  Dyadic(long value) : mantissa_(value), exponent_(0) {}  // NOLINT implicit
  Dyadic(Int mantissa, long exponent);                    // mantissa / 2^exponent

  static Dyadic zero() { return Dyadic(); }
  static Dyadic one() { return Dyadic(1); }

  // Parses "m/2^k" (canonical serialization) or a plain integer "m".
  static Dyadic parse(const std::string& text);
  std::string str() const;  // always "m/2^k", e.g. "0/2^0", "3/2^3"

  const Int& mantissa() const { return mantissa_; }
  long exponent() const { return exponent_; }

  bool is_zero() const { return mantissa_ == 0; }
  bool is_integer() const { return exponent_ == 0; }
  int sign() const { return sgn(mantissa_); }

  Rat to_rat() const;

  Dyadic operator-() const;
  Dyadic operator+(const Dyadic& other) const;
  Dyadic operator-(const Dyadic& other) const;
  Dyadic operator*(const Dyadic& other) const;
  // value * 2^k for any integer k (exact; dyadics are closed under this).
  Dyadic mul_pow2(long k) const;

  bool operator==(const Dyadic& other) const {
    return exponent_ == other.exponent_ && mantissa_ == other.mantissa_;
  }
  bool operator!=(const Dyadic& other) const { return !(*this == other); }
  bool operator<(const Dyadic& other) const { return cmp(other) < 0; }
  bool operator<=(const Dyadic& other) const { return cmp(other) <= 0; }
  bool operator>(const Dyadic& other) const { return cmp(other) > 0; }
  bool operator>=(const Dyadic& other) const { return cmp(other) >= 0; }
  int cmp(const Dyadic& other) const;

  std::size_t hash() const;

 private:
  void canonicalize();

  Int mantissa_;
  long exponent_;
};

}  // namespace barq
