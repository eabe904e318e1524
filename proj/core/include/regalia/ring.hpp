#pragma once

#include "regalia/polynomial.hpp"
#include "regalia/scalar.hpp"

#include <memory>
#include <string>
#include <vector>

namespace regalia {

/// A graded ring: either a polynomial ring k[x0..x{n-1}] with the standard
/// grading, or a quotient of one by a homogeneous ideal J.  Quotient rings
/// keep a reduced Groebner basis of J (over the ambient polynomial ring);
/// arithmetic over the quotient is performed over the ambient ring followed
/// by reduction, so every stored polynomial is a canonical representative.
class Ring : public std::enable_shared_from_this<Ring> {
 public:
  /// k[x0..x{n-1}], standard graded.  Variables are named x0..x{n-1}.
  static RingPtr polynomial_ring(CoefficientField field, int nvars);
  /// Ambient/J.  Generators must be homogeneous ambient polynomials; the
  /// reduced Groebner basis of J is computed here and cached for the lifetime
  /// of the ring.  The ambient ring must itself be a polynomial ring.
  static RingPtr quotient_ring(RingPtr ambient, std::vector<Polynomial> j_gens);

  const CoefficientField& field() const { return field_; }
  int nvars() const { return nvars_; }
  const std::string& var_name(int v) const { return var_names_.at(v); }

  bool is_polynomial_ring() const { return ambient_ == nullptr; }
  /// Null for polynomial rings.
  const RingPtr& ambient() const { return ambient_; }
  /// The underlying polynomial ring (self for polynomial rings).
  RingPtr ambient_or_self() const;

  /// Original generators of the defining ideal J (empty for polynomial rings).
  const std::vector<Polynomial>& modulus_gens() const { return modulus_gens_; }
  /// Reduced Groebner basis of J over the ambient ring (empty for polynomial
  /// rings).
  const std::vector<Polynomial>& modulus_groebner() const { return modulus_gb_; }

  /// Normal form of an ambient-ring polynomial modulo J, as an ambient-ring
  /// polynomial.  Identity for polynomial rings.
  Polynomial reduce_ambient(const Polynomial& f) const;

  /// Reinterpret an ambient polynomial as an element of this ring (reducing
  /// mod J); inverse of lift().
  Polynomial project(const Polynomial& ambient_poly) const;
  /// The canonical ambient representative of an element of this ring.
  Polynomial lift(const Polynomial& f) const;

  std::string description() const;

 private:
  Ring(CoefficientField field, int nvars);

  CoefficientField field_;
  int nvars_;
  std::vector<std::string> var_names_;
  RingPtr ambient_;                     // null for polynomial rings
  std::vector<Polynomial> modulus_gens_;  // over ambient
  std::vector<Polynomial> modulus_gb_;    // reduced GB over ambient
};

/// True if the two pointers denote the same ring object.
inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a.get() == b.get(); }

}  // namespace regalia
