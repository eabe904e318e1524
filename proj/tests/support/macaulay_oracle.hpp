#pragma once

// Degree-by-degree exact linear algebra over the coefficient field.  This is
// the independent oracle the Groebner/syzygy engine is cross-checked against:
// it never calls the Groebner path, only term arithmetic and row reduction.

#include "regalia/free_module.hpp"
#include "regalia/polynomial.hpp"
#include "regalia/ring.hpp"

#include <utility>
#include <vector>

namespace regalia::oracle {

/// Deterministically ordered k-basis (monomial, component) of the degree-d
/// slice of a graded free module over a polynomial ring.
std::vector<std::pair<Monomial, int>> degree_basis(const RingPtr& poly_ring,
                                                   const std::vector<int>& twists,
                                                   int degree);

/// Incremental row-echelon accumulator over the coefficient field.
class DenseSpan {
 public:
  explicit DenseSpan(const CoefficientField& k, int width) : k_(k), width_(width) {}

  /// Reduce v against the span; returns true (and absorbs it) if independent.
  bool add(std::vector<Scalar> v);
  bool contains(std::vector<Scalar> v) const;
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  std::vector<Scalar>* reduce(std::vector<Scalar>& v) const;
  CoefficientField k_;
  int width_;
  std::vector<std::vector<Scalar>> rows_;  // echelon rows, pivot scaled to 1
  std::vector<int> pivots_;                // pivot column per row
};

/// Dense coordinates of a module element (given as one polynomial per
/// component) with respect to degree_basis(...); the element must be
/// homogeneous of the slice degree.
std::vector<Scalar> element_vector(const RingPtr& poly_ring,
                                   const std::vector<int>& twists, int degree,
                                   const std::vector<Polynomial>& column);

/// Adds every monomial multiple of every column of A that lands in the given
/// target degree.  A must live over a polynomial ring.
void add_submodule_slice(DenseSpan& span, const GradedMatrix& A, int degree);

/// dim_k of the degree-d slice of the free module.
long long free_slice_dim(const RingPtr& poly_ring, const std::vector<int>& twists,
                         int degree);

/// dim_k (im A)_degree via row reduction.
int submodule_slice_rank(const GradedMatrix& A, int degree);

/// dim_k of coker(A) in the given degree.
long long coker_slice_dim(const GradedMatrix& A, int degree);

/// Rank of the degree-d slice of the linear map A : source_d -> target_d.
/// Equals submodule_slice_rank; kernel dimension follows by rank-nullity.
int map_slice_rank(const GradedMatrix& A, int degree);

}  // namespace regalia::oracle
