#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace regalia {

/// A coefficient-field element.  The active representation is decided by the
/// owning CoefficientField: exact rational (GMP) over QQ, or a residue in
/// [0, p) stored in a machine word over GF(p).  Scalars are created and
/// combined only through CoefficientField, which keeps the invariants.
class Scalar {
 public:
  Scalar() : fp_(0) {}

  friend class CoefficientField;

 private:
  explicit Scalar(long long fp) : fp_(fp) {}
  explicit Scalar(mpq_class q) : fp_(0), rat_(std::move(q)) {}

  long long fp_;
  mpq_class rat_;
};

/// The coefficient field of a graded ring: QQ or GF(p) for a prime p < 2^31.
/// All scalar arithmetic is exact; there is no floating point anywhere.
class CoefficientField {
 public:
  /// The field of rational numbers.
  static CoefficientField rationals();
  /// The prime field GF(p).  Throws if p is not a prime below 2^31.
  static CoefficientField prime_field(long long p);

  bool is_prime_field() const { return p_ != 0; }
  /// 0 for QQ, p for GF(p).
  long long characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long n) const;
  /// Exact rational a/b.  Over GF(p) this reduces a and inverts b mod p.
  Scalar from_fraction(long long num, long long den) const;

  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;
  bool equal(const Scalar& a, const Scalar& b) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  /// Multiplicative inverse; throws on zero.
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const;

  /// Canonical text form: integers as-is, non-integral rationals as "a/b".
  std::string str(const Scalar& a) const;

  friend bool operator==(const CoefficientField& a, const CoefficientField& b) {
    return a.p_ == b.p_;
  }
  friend bool operator!=(const CoefficientField& a, const CoefficientField& b) {
    return !(a == b);
  }

  /// "QQ" or "GF(p)".
  std::string name() const;

 private:
  explicit CoefficientField(long long p) : p_(p) {}
  long long p_ = 0;  // 0 encodes QQ
};

}  // namespace regalia
