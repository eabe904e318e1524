#pragma once

#include "regalia/complexes.hpp"
#include "regalia/graded_module.hpp"
#include "regalia/ideal.hpp"
#include "regalia/polynomial.hpp"
#include "regalia/reports.hpp"
#include "regalia/ring.hpp"

#include <vector>

namespace regalia {

/// Theorem checkers.  Each checker evaluates one verifiable statement on a
/// concrete input: it decides every hypothesis it can decide exactly (marking
/// the rest `asserted` when the caller vouches for them, `failed` otherwise),
/// evaluates the stated inequalities with exact arithmetic, and folds the
/// outcome into a TheoremReport verdict.  Checkers never weaken a bound to
/// make it pass; a satisfied relation means the exact inequality holds.

/// reg(M) = reg_S(M) + reg(S) for modules of finite projective dimension
/// over S.  Over a polynomial ring the hypothesis is automatic; over a
/// quotient ring it is verified by resolving M up to `cap` (hypothesis failed
/// when the resolution is still nonzero at the cap).
TheoremReport check_regfpd(const GradedModule& M, int cap = -1);

/// max_i {reg(Tor_i(M_1..M_s)) - i} = sum_j reg(M_j) - (s-1) reg(S), under
/// (1) dim Tor_i <= 1 for i > 0 and (2) at least s-1 of the modules have
/// finite projective dimension.  Both hypotheses are machine-verified; the
/// possibly-infinite module (at most one) is tensored last, unresolved.
TheoremReport check_regtor(const std::vector<GradedModule>& mods, int cap = -1);

/// Over a polynomial ring: (i) Tor rigidity (the nonzero Tor indices form an
/// initial segment 0..j), (ii) sum_i pdim M_i = dim R + j - epsilon with
/// 0 <= epsilon <= dim Tor_j, epsilon >= epsilon_0 := min_i {depth Tor_{j-i} + i}
/// and equality when epsilon_0 is attained at depth Tor_j, and the three-way
/// equivalence: [Tor_1 = 0 and (x)M_i Cohen-Macaulay] <=> [codim (x)M_i =
/// sum pdim M_i] <=> [proper intersection and every M_i Cohen-Macaulay].
/// Depth and dimension are read at the irrelevant maximal ideal.
TheoremReport check_rigidity_and_proper(const std::vector<GradedModule>& mods,
                                        int cap = -1);

struct FrobeniusAssertions {
  /// Vouch that the defining ideal of S is equidimensional, enabling the
  /// Jacobian-minor singular locus when S has several defining equations.
  bool equidimensional = false;
};

/// Characteristic p > 0 bounds for Frobenius powers, for e = 1..e_max:
///   reg(F^e M) <= max_{0<=i<=j<=dim S} {p^e b_i^S(M) + a_j(S) + j - i}
///              <= reg(S) + max_i {p^e b_i^S(M) - i},
/// the per-degree refinement a_l(F^e M) <= max_i {a_{i+l}(S) + p^e b_i^S(M)},
/// and, when S is not regular,
///   reg(F^e M) <= reg(S) + p^e (reg(M) + floor(dim S/2)(reg(S)-1) + dim S).
/// Hypothesis dim(Sing(S) cap Supp(M)) <= 1 is verified exactly via the
/// Jacobian criterion (cone dimension).  Throws on characteristic zero.
TheoremReport check_frobenius_bound(const GradedModule& M, int e_max,
                                    FrobeniusAssertions assertions = {});

/// Powers of an ideal with cd(S/I) <= 1, for m = 0..m_max:
///   a_1(S/I^{m+1}) <= a_1(S/I) + m b_0(I),
///   a_0(S/I^{m+1}) <= max{a_0(S/I)+b_0(I), a_1(S/I)+b_1(I)} + (m-1) b_0(I),
///   reg(S/I^{m+1}) <= max{a_0(S/I)+b_0(I), a_1(S/I)+1+reg_1(I)} + (m-1) b_0(I),
/// where b_i(I) are the top degrees of the minimal resolution of the module I.
TheoremReport check_power_bound_cd1(const Ideal& I, int m_max);

/// Powers of an ideal with dim(R/I) = 2 over a polynomial ring, complete
/// intersection at the top-dimensional primes (verified for monomial input;
/// assertable otherwise).  Checks, for j = 2..j_max, the kernel-module bounds
///   reg(S/I^j) <= max{E_j, a_2(T_j)},  a_2(T_2) <= a_2(S/I) + d_1 + d_2,
///   a_2(T_j) <= a_2(T_{j-1}) + b_0(I)  (j >= 3),
/// and the closed-form chains bounding reg(I^2) and reg(I^j) (j >= 3) in
/// terms of a_i(S/I), b_i(I), reg(I) and reg(I^sat).
TheoremReport check_power_bound_dim2(const Ideal& I, int j_max,
                                     bool assert_generic_ci = false);

/// Hypersurface sections over a polynomial ring: for forms of degrees
/// d_1 >= ... >= d_s >= 1 and M' = M/(f_1..f_s)M with delta = dim M,
/// delta' = dim M', checks for every i >= delta' - 1
///   a_i(M') <= max_t {a_{i+t}(M) + d_1 + ... + d_t},
/// plus the dim M' = 1 regularity bounds and the dim M' = 2 bounds for
/// reg(M'/H^0(M')).
TheoremReport check_koszul_bounds(const GradedModule& M,
                                  const std::vector<Polynomial>& forms);

/// Degree bounds for the homology of a non-acyclic complex F (x) M: with
/// delta_p = max_i a_{p+i}(F_i (x) M) and epsilon_q = max_i a_i(F_{q+i} (x) M),
/// checks a_p(H_0) <= delta_p for p >= tau - 1 where tau is the least value
/// making cd H_i <= tau - 1 + i for all i > 0, and, when cd H_i <= 1 for all
/// i >= 1, the full set a_p(H_0) <= delta_p (p >= 0), a_0(H_q) <= epsilon_q
/// and a_1(H_q) <= epsilon_{q-1} (q >= 1).
TheoremReport check_nonacyclic(const ChainComplex& F, const GradedModule& M);

/// Betti number transfer along R -> S = R/J for a graded S-module M, for
/// i = 0..i_max: the composition bound b_i^S(M) <= max_p {b_{i-p}^R(M) + E_p}
/// with its two relaxations, the two-sided regularity comparison
///   -reg_i^R(S) <= reg_i^S(M) - reg_i^R(M) <= max{0, floor(i/2)(reg_{i-1}^R(S)-1)},
/// and, when reg_R(S) = 1, the sandwich reg_i^R(M) - 1 <= reg_i^S(M) <=
/// reg_i^R(M) together with b_i^S(M) <= reg(M) + i.
TheoremReport check_betti_transfer(const GradedModule& M, int i_max, int cap = -1);

struct IntersectionAssertions {
  /// Vouch for properness of the intersection off a one-dimensional locus.
  bool proper = false;
  /// Vouch for Cohen-Macaulayness of the Z_i off a one-dimensional locus.
  bool local_cm = false;
  /// Vouch that the ambient scheme is regular at the intersection off a
  /// one-dimensional locus (used when the Jacobian criterion is unavailable).
  bool small_singular_intersection = false;
};

/// Regularity of a proper-intersection locus: for subschemes Z_0..Z_s of
/// Proj(S) given by ideals[0..s],
///   reg(Z) <= reg(Z_0) + sum_{i=1}^{min(s, dim Z_0)} max{reg(Z_i), reg(S)-1}
///             + floor((dim Z_0 - 1)/2) max{reg(S)-1, 0},
/// with scheme regularities read as reg over the part of positive depth
/// (insensitive to saturation).  Inputs Z_1..Z_s are sorted by regularity
/// internally; properness and Cohen-Macaulayness are verified globally when
/// possible, otherwise accepted via the assertions.
TheoremReport check_intersection_bound(const std::vector<Ideal>& ideals,
                                       IntersectionAssertions assertions = {});

struct KahlerAssertions {
  /// Vouch for generic complete intersection when not machine-verifiable.
  bool generically_ci = false;
  /// Vouch that B is generically reduced (enables the a_1 bound).
  bool generically_reduced = false;
  /// Vouch that B is a reduced complete intersection off finitely many
  /// points (enables the a_0 bound).
  bool reduced_ci_off_points = false;
};

/// Degree bounds for Kaehler differentials of a dimension-3 graded algebra B
/// (a surface in Proj), generically a complete intersection:
///   a_3(Omega_B) <= a_3(B) + 1,
///   a_2(Omega_B) <= max{a_2(B)+1, a_3(B)+b_0},
/// plus, under the respective assertions,
///   a_1(Omega_B) <= max{a_1(B)+1, a_2(B)+b_0, a_3(B)+b_1} and
///   a_0(Omega_B) <= max{a_0(B)+1, a_1(B)+b_0, a_2(B)+b_1, a_3(B)+b_2,
///                       a_3(B)+d_1+d_2},
/// where b_i are the top degrees of the minimal resolution of the defining
/// ideal as a module and d_1 >= d_2 its two largest minimal generator degrees.
TheoremReport check_kahler_bounds(const RingPtr& B, KahlerAssertions assertions = {});

}  // namespace regalia
