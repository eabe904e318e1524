#pragma once

#include "regalia/free_module.hpp"
#include "regalia/polynomial.hpp"
#include "regalia/ring.hpp"

#include <vector>

namespace regalia {

/// A finite complex of graded free modules F_0 <- F_1 <- ... <- F_L with
/// homogeneous differentials d_i : F_i -> F_{i-1}.  Construction verifies
/// d_i composed with d_{i+1} is exactly zero and that sources/targets line
/// up with the module list.
class ChainComplex {
 public:
  /// A single free module in homological degree 0.
  explicit ChainComplex(FreeModule f0);
  /// modules = F_0..F_L, diffs[i] = d_{i+1} : F_{i+1} -> F_i.
  ChainComplex(std::vector<FreeModule> modules, std::vector<GradedMatrix> diffs);

  const RingPtr& ring() const { return modules_.front().ring; }
  /// Top homological index L.
  int length() const { return static_cast<int>(modules_.size()) - 1; }
  const FreeModule& module(int i) const { return modules_.at(i); }
  /// d_i : F_i -> F_{i-1}, for 1 <= i <= length().
  const GradedMatrix& d(int i) const { return diffs_.at(i - 1); }

  /// Largest generator degree of F_i (-inf if F_i = 0).
  ExtInt max_twist(int i) const { return modules_.at(i).max_twist(); }

  std::string str() const;

 private:
  std::vector<FreeModule> modules_;
  std::vector<GradedMatrix> diffs_;
};

/// Koszul complex K(f_1..f_s) on homogeneous forms: K_k has one component
/// e_{i1<...<ik} per k-subset (enumerated lexicographically) with twist
/// d_{i1}+...+d_{ik}; d(e_{i1...ik}) = sum_j (-1)^{j+1} f_{ij} e_{omit j}.
ChainComplex koszul_complex(const RingPtr& ring, const std::vector<Polynomial>& forms);

/// Total complex of C (x) D with Koszul signs: block (i, j), i + j = l,
/// carries d_C (x) id and (-1)^i id (x) d_D.
ChainComplex tensor_pair(const ChainComplex& C, const ChainComplex& D);
/// Left fold of tensor_pair over a nonempty list.
ChainComplex tensor_complexes(const std::vector<ChainComplex>& cs);

/// Gaussian cancellation of unit (degree-zero) entries until none remain.
/// Homotopy equivalent to the input: all homology Hilbert functions are
/// preserved.  The result of minimalizing a resolution is the minimal one.
ChainComplex minimalize(ChainComplex c);

}  // namespace regalia
