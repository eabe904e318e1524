#pragma once

#include "regalia/extint.hpp"
#include "regalia/monomial.hpp"
#include "regalia/scalar.hpp"

#include <memory>
#include <string>
#include <vector>

namespace regalia {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// One polynomial term: coefficient times monomial.
struct Term {
  Scalar coeff;
  Monomial mono;
};

/// An exact polynomial over a graded ring.  Terms are kept sorted in strictly
/// descending grevlex order with nonzero coefficients; over a quotient ring
/// every polynomial is stored in normal form with respect to the cached
/// Groebner basis of the defining ideal.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial zero(RingPtr ring);
  static Polynomial constant(RingPtr ring, long long c);
  static Polynomial variable(RingPtr ring, int v);
  /// Normalizes (sort, merge, drop zeros) and reduces in quotient rings.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Nonzero constant (degree-0) polynomial, i.e. a unit.
  bool is_unit_constant() const;

  /// Max term degree; -inf for the zero polynomial.
  ExtInt degree() const;
  bool is_homogeneous() const;

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Scalar& leading_coeff() const { return leading_term().coeff; }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial scaled(const Scalar& c) const;
  Polynomial times_monomial(const Monomial& m) const;
  Polynomial times_term(const Scalar& c, const Monomial& m) const;
  /// Leading coefficient normalized to 1 (zero stays zero).
  Polynomial monic() const;
  Polynomial pow(int k) const;
  /// k-th power via the characteristic-p identity (sum of q-th powers of
  /// terms); requires q to be a power of char(k) > 0.
  Polynomial frobenius_pow(long long q) const;
  /// Partial derivative with respect to variable v.
  Polynomial derivative(int v) const;

  /// Canonical text form, e.g. "3*x0^2*x1 - x2^3"; re-parses to an equal
  /// polynomial.
  std::string str() const;

 private:
  Polynomial(RingPtr ring, std::vector<Term> terms)
      : ring_(std::move(ring)), terms_(std::move(terms)) {}

  RingPtr ring_;
  std::vector<Term> terms_;
};

}  // namespace regalia
