#include "regalia/scalar.hpp"

#include <stdexcept>

namespace regalia {

namespace {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long long mod_pos(long long v, long long p) {
  long long r = v % p;
  return r < 0 ? r + p : r;
}

// Inverse mod p via extended Euclid; a must be nonzero mod p.
long long mod_inv(long long a, long long p) {
  long long t = 0, new_t = 1, r = p, new_r = mod_pos(a, p);
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("CoefficientField: inverse of zero divisor");
  return mod_pos(t, p);
}

}  // namespace

CoefficientField CoefficientField::rationals() { return CoefficientField(0); }

CoefficientField CoefficientField::prime_field(long long p) {
  if (p >= (1LL << 31) || !is_prime(p))
    throw std::domain_error("CoefficientField: characteristic must be a prime below 2^31");
  return CoefficientField(p);
}

Scalar CoefficientField::zero() const { return from_int(0); }
Scalar CoefficientField::one() const { return from_int(1); }

Scalar CoefficientField::from_int(long long n) const {
  if (is_prime_field()) return Scalar(mod_pos(n, p_));
  return Scalar(mpq_class(static_cast<long>(n)));
}

Scalar CoefficientField::from_fraction(long long num, long long den) const {
  if (den == 0) throw std::domain_error("CoefficientField: zero denominator");
  if (is_prime_field()) {
    long long d = mod_pos(den, p_);
    if (d == 0) throw std::domain_error("CoefficientField: denominator divisible by p");
    return Scalar(mod_pos(num, p_) * mod_inv(d, p_) % p_);
  }
  mpq_class q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q.canonicalize();
  return Scalar(q);
}

bool CoefficientField::is_zero(const Scalar& a) const {
  return is_prime_field() ? a.fp_ == 0 : a.rat_ == 0;
}

bool CoefficientField::is_one(const Scalar& a) const {
  return is_prime_field() ? a.fp_ == 1 : a.rat_ == 1;
}

bool CoefficientField::equal(const Scalar& a, const Scalar& b) const {
  return is_prime_field() ? a.fp_ == b.fp_ : a.rat_ == b.rat_;
}

Scalar CoefficientField::add(const Scalar& a, const Scalar& b) const {
  if (is_prime_field()) return Scalar((a.fp_ + b.fp_) % p_);
  return Scalar(mpq_class(a.rat_ + b.rat_));
}

Scalar CoefficientField::sub(const Scalar& a, const Scalar& b) const {
  if (is_prime_field()) return Scalar(mod_pos(a.fp_ - b.fp_, p_));
  return Scalar(mpq_class(a.rat_ - b.rat_));
}

Scalar CoefficientField::mul(const Scalar& a, const Scalar& b) const {
  if (is_prime_field()) return Scalar(a.fp_ * b.fp_ % p_);
  return Scalar(mpq_class(a.rat_ * b.rat_));
}

Scalar CoefficientField::neg(const Scalar& a) const {
  if (is_prime_field()) return Scalar(a.fp_ == 0 ? 0 : p_ - a.fp_);
  return Scalar(mpq_class(-a.rat_));
}

Scalar CoefficientField::inv(const Scalar& a) const {
  if (is_zero(a)) throw std::domain_error("CoefficientField: inverse of zero");
  if (is_prime_field()) return Scalar(mod_inv(a.fp_, p_));
  return Scalar(mpq_class(1 / a.rat_));
}

Scalar CoefficientField::div(const Scalar& a, const Scalar& b) const {
  return mul(a, inv(b));
}

std::string CoefficientField::str(const Scalar& a) const {
  if (is_prime_field()) return std::to_string(a.fp_);
  return a.rat_.get_str();
}

std::string CoefficientField::name() const {
  return is_prime_field() ? "GF(" + std::to_string(p_) + ")" : "QQ";
}

}  // namespace regalia
