#pragma once

#include "regalia/free_module.hpp"
#include "regalia/polynomial.hpp"
#include "regalia/ring.hpp"

#include <vector>

namespace regalia {

/// One term of a free-module element: coefficient, monomial, component index.
struct ModTerm {
  Scalar coeff;
  Monomial mono;
  int comp;
};

/// A free-module element as a sparse sorted term list (descending module
/// order).
using ModVec = std::vector<ModTerm>;

/// The module term order: position-over-term.  A term in a lower-indexed
/// component is larger; ties are broken by grevlex on the monomial.  With
/// components laid out leading-block-first this doubles as the elimination
/// order used for syzygy computations.
bool modterm_less(const ModTerm& a, const ModTerm& b);

/// Degree of a homogeneous module element under the given twists; throws on
/// inhomogeneous input.  -inf for zero.
ExtInt modvec_degree(const ModVec& f, const std::vector<int>& twists);

/// Buchberger over a polynomial ring: reduced, auto-reduced, monic Groebner
/// basis of the submodule of Ring^rank generated by gens.  Deterministic:
/// output sorted by ascending leading term.  Normal-pair scheduling with the
/// coprimality criterion (rank 1) and the chain criterion.
std::vector<ModVec> module_groebner(const RingPtr& poly_ring, int rank,
                                    std::vector<ModVec> gens);

/// Full normal form (every term reduced) against a Groebner basis.
ModVec module_normal_form(const RingPtr& poly_ring, ModVec f,
                          const std::vector<ModVec>& gb);

/// Rank-one conveniences for ideals over a polynomial ring.
std::vector<Polynomial> poly_groebner(const RingPtr& poly_ring,
                                      const std::vector<Polynomial>& gens);
Polynomial poly_normal_form(const Polynomial& f, const std::vector<Polynomial>& gb);

/// Convert between matrix columns and module elements.
ModVec column_to_modvec(const std::vector<Polynomial>& column);
std::vector<Polynomial> modvec_to_column(const RingPtr& ring, int rank, const ModVec& v);

/// Groebner data for the image of a graded matrix inside its target.  Over a
/// quotient ring the computation happens over the ambient polynomial ring
/// with the defining ideal adjoined in every component, which is the correct
/// notion for normal forms, membership, initial modules and Hilbert counts.
struct SubmoduleGB {
  RingPtr ambient;                // polynomial ring
  std::vector<int> twists;        // target twists
  std::vector<ModVec> gb;         // reduced GB over the ambient ring
};
SubmoduleGB submodule_groebner(const GradedMatrix& A);

/// Membership of a target-module element in the image of A (mod J over
/// quotient rings).
bool submodule_contains(const SubmoduleGB& S, const std::vector<Polynomial>& column);

/// Kernel of A as a graded matrix F_syz -> source(A), via an elimination
/// Groebner basis.  Works over quotient rings (kernel of the induced map).
/// Columns are homogeneous generators of the kernel, sorted by degree.
GradedMatrix syzygy_matrix(const GradedMatrix& A);

/// Generators of the preimage {v in source(A) : A(v) lies in im(B)}, as a
/// graded matrix into source(A).  A and B must share their target.  Over a
/// quotient ring membership is taken mod the defining ideal.
GradedMatrix preimage_matrix(const GradedMatrix& A, const GradedMatrix& B);

}  // namespace regalia
