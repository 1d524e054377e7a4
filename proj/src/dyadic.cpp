#include "barq/dyadic.hpp"

#include <stdexcept>

namespace barq {

Dyadic::Dyadic(Int mantissa, long exponent)
    : mantissa_(std::move(mantissa)), exponent_(exponent) {
  if (exponent < 0) throw std::invalid_argument("dyadic exponent must be >= 0");
  canonicalize();
}

void Dyadic::canonicalize() {
  if (mantissa_ == 0) {
    exponent_ = 0;
    return;
  }
  // Strip shared factors of two while the exponent lasts.
  const mp_bitcnt_t twos = mpz_scan1(mantissa_.get_mpz_t(), 0);
  const long shift = std::min<long>(static_cast<long>(twos), exponent_);
  if (shift > 0) {
    mpz_fdiv_q_2exp(mantissa_.get_mpz_t(), mantissa_.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    exponent_ -= shift;
  }
}

Dyadic Dyadic::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    Int m;
    if (m.set_str(text, 10) != 0) throw std::invalid_argument("malformed dyadic: " + text);
    return Dyadic(std::move(m), 0);
  }
  if (text.compare(slash, 3, "/2^") != 0)
    throw std::invalid_argument("malformed dyadic (expected m/2^k): " + text);
  Int m;
  if (m.set_str(text.substr(0, slash), 10) != 0)
    throw std::invalid_argument("malformed dyadic mantissa: " + text);
  const std::string exp_part = text.substr(slash + 3);
  if (exp_part.empty() || exp_part.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("malformed dyadic exponent: " + text);
  const long k = std::stol(exp_part);
  return Dyadic(std::move(m), k);
}

std::string Dyadic::str() const {
  return mantissa_.get_str() + "/2^" + std::to_string(exponent_);
}

Rat Dyadic::to_rat() const {
  Int den(1);
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(exponent_));
  Rat q(mantissa_, den);
  q.canonicalize();
  return q;
}

Dyadic Dyadic::operator-() const {
  Dyadic r(*this);
  r.mantissa_ = -r.mantissa_;
  return r;
}

Dyadic Dyadic::operator+(const Dyadic& other) const {
  const long e = std::max(exponent_, other.exponent_);
  Int a = mantissa_, b = other.mantissa_;
  mpz_mul_2exp(a.get_mpz_t(), a.get_mpz_t(), static_cast<mp_bitcnt_t>(e - exponent_));
  mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), static_cast<mp_bitcnt_t>(e - other.exponent_));
  return Dyadic(a + b, e);
}

Dyadic Dyadic::operator-(const Dyadic& other) const { return *this + (-other); }

Dyadic Dyadic::operator*(const Dyadic& other) const {
  return Dyadic(mantissa_ * other.mantissa_, exponent_ + other.exponent_);
}

Dyadic Dyadic::mul_pow2(long k) const {
  if (is_zero()) return Dyadic();
  Dyadic r(*this);
  if (k >= 0) {
    const long from_exponent = std::min(k, r.exponent_);
    r.exponent_ -= from_exponent;
    if (k > from_exponent)
      mpz_mul_2exp(r.mantissa_.get_mpz_t(), r.mantissa_.get_mpz_t(),
                   static_cast<mp_bitcnt_t>(k - from_exponent));
  } else {
    // An even integer mantissa can now share factors of two with the larger
    // exponent, so restore the canonical form.
    r.exponent_ += -k;
    r.canonicalize();
  }
  return r;
}

int Dyadic::cmp(const Dyadic& other) const {
  return (*this - other).sign();
}

std::size_t Dyadic::hash() const {
  return hash_combine(hash_mpz(mantissa_), static_cast<std::size_t>(exponent_));
}

}  // namespace barq
