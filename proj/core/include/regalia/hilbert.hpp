#pragma once

#include "regalia/extint.hpp"
#include "regalia/groebner.hpp"
#include "regalia/ideal.hpp"
#include "regalia/monomial.hpp"

#include <vector>

namespace regalia {

/// Hilbert data of a graded module: exact Hilbert-function values on a
/// degree window plus the Krull dimension and the initial degree.
struct HilbertData {
  int lo = 0;
  int hi = -1;
  std::vector<long long> values;  // values[d - lo] = dim_k M_d
  ExtInt dim = ExtInt::neg_inf();    // -inf for the zero module
  ExtInt indeg = ExtInt::pos_inf();  // +inf for the zero module

  long long value(int d) const;
};

/// Numerator coefficients of the Hilbert series of R/(monomial ideal) written
/// as N(t)/(1-t)^nvars; an empty vector encodes the zero numerator (unit
/// ideal).  Computed by the pure-power pivot recursion.
std::vector<long long> hilbert_numerator(int nvars, std::vector<Monomial> gens);

/// Hilbert function of coker = target/(image + J*target) in one degree.
long long coker_hf(const SubmoduleGB& G, int degree);
/// Krull dimension of the cokernel (-inf for the zero module).
ExtInt coker_dim(const SubmoduleGB& G);
/// Least degree with a nonzero component (+inf for the zero module).
ExtInt coker_indeg(const SubmoduleGB& G);

/// Hilbert data of coker(A) over A's ring on the window [lo, hi].
HilbertData hilbert_data(const GradedMatrix& A, int lo, int hi);
/// Hilbert data of ring/I on the window [lo, hi].
HilbertData hilbert_data(const Ideal& I, int lo, int hi);

/// Krull dimension of ring/I.
ExtInt krull_dim(const Ideal& I);
/// dim(ring) - dim(ring/I); the codimension (height) of the ideal.
ExtInt codim(const Ideal& I);

}  // namespace regalia
