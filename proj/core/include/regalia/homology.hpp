#pragma once

#include "regalia/complexes.hpp"
#include "regalia/graded_module.hpp"
#include "regalia/ideal.hpp"

#include <memory>
#include <mutex>
#include <vector>

namespace regalia {

/// A subquotient N/D of a graded free module: N and D are given by generator
/// columns into the ambient free module, with D contained in N (verified at
/// construction by Groebner membership).  Hilbert values come from the two
/// cokernel counts; dimension and initial degree from the induced
/// presentation.  Copies share all caches.
class Subquotient {
 public:
  Subquotient(GradedMatrix num, GradedMatrix den);

  /// The whole free module F / zero submodule.
  static Subquotient whole(FreeModule f);

  const FreeModule& ambient() const { return num_.target(); }
  const GradedMatrix& num() const { return num_; }
  const GradedMatrix& den() const { return den_; }

  long long hf(int degree) const;
  HilbertData hilbert(int lo, int hi) const;
  bool is_zero() const;
  ExtInt dim() const;
  ExtInt indeg() const;

  /// Presentation of N/D: generators are N's columns, relations are the
  /// coordinates of (im N meets im D-plus-kernel); i.e. the preimage of D
  /// under N.
  const GradedModule& to_module() const;

 private:
  GradedMatrix num_, den_;
  struct Cache {
    std::mutex mu;
    std::shared_ptr<const SubmoduleGB> num_gb, den_gb;
    std::shared_ptr<const GradedModule> mod;
  };
  const SubmoduleGB& num_gb() const;
  const SubmoduleGB& den_gb() const;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// i-th homology of C (x) M as a subquotient, for a free complex C and
/// M = coker(A).  Exact over quotient rings as well (all membership runs
/// modulo the defining ideal).
Subquotient homology_with_coefficients(const ChainComplex& C, const GradedModule& M,
                                       int i);

/// Plain homology H_i(C) of a free complex.
Subquotient complex_homology(const ChainComplex& C, int i);

/// Multiple Tor: resolve all but the last module minimally, tensor the
/// resolutions, tensor with the last module and take homology.  cap bounds
/// each resolution length over quotient rings.
Subquotient tor_multi(const std::vector<GradedModule>& mods, int i, int cap = -1);

/// The cycle description of Tor_1 of s cyclic modules ring/I_k: the module
/// M = {x in I_1 (+) ... (+) I_s : sum x_k = 0} modulo the submodule P
/// generated by pairwise products placed in two slots with opposite signs.
Subquotient tor1_cycles(const std::vector<Ideal>& ideals);

/// i-th Koszul homology H_i(K(forms) (x) M).
Subquotient koszul_homology(const std::vector<Polynomial>& forms,
                            const GradedModule& M, int i);

/// Ext^k(M, R(-dual_twist)) for k = 0..pdim(M), over a polynomial ring,
/// via the dualized minimal free resolution.
std::vector<Subquotient> ext_modules(const GradedModule& M, int dual_twist);

}  // namespace regalia
