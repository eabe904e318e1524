#pragma once

#include "regalia/complexes.hpp"
#include "regalia/extint.hpp"
#include "regalia/graded_module.hpp"

#include <stdexcept>
#include <vector>

namespace regalia {

/// Local-cohomology degree data of a graded module M over its ambient
/// polynomial ring: a[i] is the top degree of H^i_{m}(M), -inf when that
/// cohomology vanishes.  Indices run 0..nvars.
struct AInvariants {
  std::vector<ExtInt> a;

  /// a_i, with -inf outside the stored range.
  ExtInt a_at(int i) const;
  /// Castelnuovo-Mumford regularity max_i {a_i + i}; -inf for the zero module.
  ExtInt reg() const;
  /// max_{i >= 1} {a_i + i}: the regularity of the associated sheaf data,
  /// ignoring the degree-0 local cohomology.
  ExtInt reg1() const;
  /// Cohomological dimension: max {i : a_i != -inf}; -inf for the zero module.
  ExtInt cd() const;
  /// min {i : a_i != -inf}; +inf for the zero module.  Over a field base this
  /// is the depth with respect to the irrelevant ideal.
  ExtInt depth() const;
  /// True when at most one index has nonvanishing cohomology.
  bool cohen_macaulay() const;
};

/// a-invariants by graded duality: a_i(M) = -indeg Ext^{N-i}_R(M, R(-N)) over
/// the ambient polynomial ring in N variables.  Works for modules over
/// quotient rings by restriction (local cohomology is insensitive to the
/// finite ring change).
AInvariants a_invariants(const GradedModule& M);

enum class RegRoute { duality, betti };

/// Thrown when the requested regularity route cannot produce a value
/// (betti route over a quotient ring where the resolution did not finish).
struct RouteUnavailable : std::runtime_error {
  explicit RouteUnavailable(const std::string& what) : std::runtime_error(what) {}
};

/// Castelnuovo-Mumford regularity via the requested route.
///   duality: max {a_i + i} from a_invariants.
///   betti over a polynomial ring: max {b_i - i} from the minimal resolution.
///   betti over a quotient ring S: reg^S(M) + reg(S), valid when the
///   S-resolution terminates (finite projective dimension); RouteUnavailable
///   otherwise.
/// Over polynomial rings the two routes are computed and cross-checked on
/// every call; a mismatch throws logic_error.
ExtInt regularity(const GradedModule& M, RegRoute route);

/// The two degree-bound tables of a complex D_0..D_L read off per-term
/// a-invariants:
///   delta[p]   = max_{i >= 0} a_{p+i}(D_i)
///   epsilon[q] = max_{i >= 0} a_i(D_{q+i})
struct ComplexBounds {
  std::vector<ExtInt> delta;    // indexed by p
  std::vector<ExtInt> epsilon;  // indexed by q = 0..L
};

/// Bounds from explicit per-term a-invariants (terms[i] describes D_i).
ComplexBounds complex_bounds(const std::vector<AInvariants>& terms);

/// Bounds for D = F (x) M using the twist shift
/// a_p(F_i (x) M) = a_p(M) + maxtwist(F_i); empty tables for a zero complex.
ComplexBounds complex_bounds_tensor(const ChainComplex& F, const GradedModule& M);

}  // namespace regalia
