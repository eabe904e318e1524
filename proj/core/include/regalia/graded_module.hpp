#pragma once

#include "regalia/betti.hpp"
#include "regalia/free_module.hpp"
#include "regalia/hilbert.hpp"
#include "regalia/ideal.hpp"
#include "regalia/resolution.hpp"

#include <memory>
#include <mutex>

namespace regalia {

/// A finitely generated graded module over R or S = R/J, presented as the
/// cokernel of a homogeneous matrix between twisted free modules.  Values
/// are copyable; copies share the resolution cache.
class GradedModule {
 public:
  explicit GradedModule(GradedMatrix presentation);

  /// The free module F itself (no relations).
  static GradedModule free_module(FreeModule f);
  /// ring/I as a cyclic module.
  static GradedModule cyclic(const Ideal& I);
  /// ring with a twist: ring(-d) has its generator in degree d.
  static GradedModule twisted_ring(RingPtr ring, int d);
  static GradedModule zero_module(RingPtr ring);

  const RingPtr& ring() const { return pres_.target().ring; }
  const GradedMatrix& presentation() const { return pres_; }

  /// Minimal free resolution over the module's own ring, cached.  A larger
  /// cap recomputes if the cached one was truncated short of it.
  const Resolution& resolution(int cap = -1) const;
  /// Betti table of the minimal resolution (see resolution() about caps).
  BettiTable betti(int cap = -1) const;

  HilbertData hilbert(int lo, int hi) const;
  long long hf(int degree) const;
  ExtInt dim() const;
  ExtInt indeg() const;
  bool is_zero() const;
  /// The annihilator ideal ann(M) = {f : f M = 0}.
  Ideal annihilator() const;
  /// pdim over the module's ring; +inf if the capped resolution truncated.
  ExtInt proj_dim(int cap = -1) const;

 private:
  const SubmoduleGB& relations_gb() const;

  GradedMatrix pres_;
  struct Cache {
    std::mutex mu;
    std::shared_ptr<const Resolution> res;  // longest computed so far
    int res_cap = -1;
    std::shared_ptr<const SubmoduleGB> rel_gb;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// The same module viewed over the ambient polynomial ring: the presentation
/// gains one J-relations block per target component.  Identity on modules
/// already over a polynomial ring.
GradedModule restrict_to_ambient(const GradedModule& M);

}  // namespace regalia
