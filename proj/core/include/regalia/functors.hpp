#pragma once

#include "regalia/complexes.hpp"
#include "regalia/extint.hpp"
#include "regalia/graded_module.hpp"
#include "regalia/homology.hpp"
#include "regalia/ideal.hpp"

#include <vector>

namespace regalia {

/// Entrywise q-th power of a matrix, q = p^e, with twists scaled by q.
/// Requires prime characteristic.  The grading stays consistent because each
/// entry's degree scales by exactly q.
GradedMatrix frobenius_matrix(const GradedMatrix& A, int e);

/// Entrywise Frobenius of a whole complex (d o d = 0 is preserved since the
/// Frobenius is a ring endomorphism on entries).
ChainComplex frobenius_complex(const ChainComplex& C, int e);

/// Frobenius power functor: for M = coker(A) returns coker(A^{[p^e]}) with
/// all twists scaled by p^e.  e = 0 is the identity.  For a cyclic module
/// S/I this is S/I^{[p^e]}.  Throws std::invalid_argument in characteristic
/// zero or for e < 0.
GradedModule frobenius_power(const GradedModule& M, int e);

/// H_i of the entrywise Frobenius of a minimal free resolution of M, which
/// computes Tor_i(M, S^{[e]}).  `truncated` is set when the capped
/// resolution stopped short of homological degree i, in which case `value`
/// only reflects the computed prefix.
struct FrobeniusTor {
  Subquotient value;
  bool truncated = false;
};
FrobeniusTor frobenius_tor(const GradedModule& M, int e, int i, int cap = -1);

/// T_ell = ker(I (x) I^{ell-1} -> I^ell), presented as a subquotient of the
/// tensor product of the two generator free modules: numerator = syzygies of
/// the multiplication row (f_k * g_j), denominator = the relations of
/// I (x) I^{ell-1} itself (syzygies of either factor tensored with the
/// identity of the other).  Requires ell >= 2.
struct PowerKernel {
  int ell = 0;
  Subquotient T;
};
PowerKernel power_kernel(const Ideal& I, int ell);

/// Kaehler differentials of B = S/I over the base field, via the conormal
/// presentation  0 -> K -> I/I^2 --psi--> B(-1)^n -> Omega_B -> 0  with psi
/// the Jacobian of the stored generators of I.  For a polynomial ring B the
/// differentials are free: Omega = B(-1)^n and K = 0.
struct KahlerModule {
  RingPtr ring;          ///< B itself
  GradedModule omega;    ///< coker of the Jacobian into B(-1)^n
  Subquotient kernel;    ///< K = ker(I/I^2 -> B(-1)^n)
};
KahlerModule kahler_module(const RingPtr& B);

/// Dimension of the singular locus of S = R/J by the Jacobian criterion:
/// dim V(J + (c x c minors of Jac(J))) with c = codim(J).  A polynomial
/// ring has empty singular locus (-inf).  The criterion needs J
/// equidimensional; a single defining equation (or none) is automatically
/// so, while two or more generators require the caller to assert it, else
/// the call refuses with an explanation.  In small positive characteristic
/// (p <= max generator degree) the Jacobian criterion may miss inseparable
/// behavior; that sets the advisory caveat flag.
struct SingLocus {
  ExtInt dim;
  bool inseparability_caveat = false;
};
SingLocus sing_locus_dim(const RingPtr& S, bool assert_equidimensional = false);

/// The ideal J + (c x c minors) over the ambient polynomial ring whose
/// vanishing locus is Sing(S); the unit ideal for a polynomial ring.  Used
/// directly by sing_locus_dim and by hypothesis checks that intersect the
/// singular locus with a module's support.
Ideal singular_locus_ideal(const RingPtr& S, bool assert_equidimensional = false,
                           bool* inseparability_caveat = nullptr);

/// True when every generator of I is a single term.
bool is_monomial_ideal(const Ideal& I);

/// Minimal primes of a monomial ideal, each as a sorted list of variable
/// indices (the prime is generated by those variables).  These are the
/// minimal hitting sets of the generator supports.  The zero ideal has the
/// single minimal prime (0) = {}; the unit ideal has none.  Throws
/// std::invalid_argument on non-monomial input.
std::vector<std::vector<int>> monomial_minimal_primes(const Ideal& I);

/// Whether the monomial ideal I is a complete intersection at every minimal
/// prime of maximal dimension (a "generically complete intersection" check
/// at the generic points of the top-dimensional components): localizing at
/// such a prime P kills the variables outside P, and the localized ideal is
/// CI exactly when its divisibility-minimal generators number codim(I).
bool monomial_generic_ci(const Ideal& I);

}  // namespace regalia
