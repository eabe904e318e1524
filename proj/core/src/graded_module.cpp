#include "regalia/graded_module.hpp"

#include <stdexcept>

namespace regalia {

GradedModule::GradedModule(GradedMatrix presentation) : pres_(std::move(presentation)) {}

GradedModule GradedModule::free_module(FreeModule f) {
  RingPtr ring = f.ring;
  return GradedModule(GradedMatrix(std::move(f), FreeModule{ring, {}}));
}

GradedModule GradedModule::cyclic(const Ideal& I) {
  return GradedModule(generator_row(I));
}

GradedModule GradedModule::twisted_ring(RingPtr ring, int d) {
  return free_module(FreeModule{std::move(ring), {d}});
}

GradedModule GradedModule::zero_module(RingPtr ring) {
  return free_module(FreeModule{std::move(ring), {}});
}

const Resolution& GradedModule::resolution(int cap) const {
  if (cap < 0) cap = default_resolution_cap(ring());
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->res || (cache_->res->truncated && cap > cache_->res_cap)) {
    cache_->res = std::make_shared<Resolution>(free_resolution(pres_, cap));
    cache_->res_cap = cap;
  }
  return *cache_->res;
}

BettiTable GradedModule::betti(int cap) const {
  return betti_from_complex(resolution(cap).complex);
}

const SubmoduleGB& GradedModule::relations_gb() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->rel_gb)
    cache_->rel_gb = std::make_shared<SubmoduleGB>(submodule_groebner(pres_));
  return *cache_->rel_gb;
}

HilbertData GradedModule::hilbert(int lo, int hi) const {
  if (lo > hi) throw std::invalid_argument("GradedModule::hilbert: empty window");
  const SubmoduleGB& g = relations_gb();
  HilbertData data;
  data.lo = lo;
  data.hi = hi;
  for (int d = lo; d <= hi; ++d) data.values.push_back(coker_hf(g, d));
  data.dim = coker_dim(g);
  data.indeg = coker_indeg(g);
  return data;
}

long long GradedModule::hf(int degree) const { return coker_hf(relations_gb(), degree); }

ExtInt GradedModule::dim() const { return coker_dim(relations_gb()); }

ExtInt GradedModule::indeg() const { return coker_indeg(relations_gb()); }

bool GradedModule::is_zero() const { return dim().is_neg_inf(); }

Ideal GradedModule::annihilator() const {
  const RingPtr& r = ring();
  int rank = pres_.target().rank();
  if (rank == 0) return Ideal::unit(r);
  bool first = true;
  Ideal acc = Ideal::unit(r);
  for (int k = 0; k < rank; ++k) {
    // {f : f e_k in im(presentation)}: preimage along f -> f e_k.
    GradedMatrix ek(pres_.target(), FreeModule{r, {pres_.target().twist(k)}});
    ek.set_entry(k, 0, Polynomial::constant(r, 1));
    GradedMatrix pre = preimage_matrix(ek, pres_);
    std::vector<Polynomial> gens;
    for (int c = 0; c < pre.cols(); ++c)
      if (!pre.entry(0, c).is_zero()) gens.push_back(pre.entry(0, c));
    Ideal colon(r, gens);
    acc = first ? colon : ideal_intersection(acc, colon);
    first = false;
  }
  return acc;
}

ExtInt GradedModule::proj_dim(int cap) const {
  if (is_zero()) return ExtInt::neg_inf();
  const Resolution& res = resolution(cap);
  if (res.truncated) return ExtInt::pos_inf();
  return ExtInt(res.complex.length());
}

GradedModule restrict_to_ambient(const GradedModule& M) {
  const RingPtr& S = M.ring();
  if (S->is_polynomial_ring()) return M;
  const RingPtr& R = S->ambient();
  const GradedMatrix& A = M.presentation();
  int rank = A.target().rank();
  FreeModule target{R, A.target().twists};
  std::vector<int> twists;
  std::vector<std::vector<Polynomial>> entries(rank);
  for (int c = 0; c < A.cols(); ++c) {
    twists.push_back(A.source().twist(c));
    for (int r = 0; r < rank; ++r) entries[r].push_back(S->lift(A.entry(r, c)));
  }
  for (int k = 0; k < rank; ++k)
    for (const Polynomial& j : S->modulus_gens()) {
      twists.push_back(A.target().twist(k) + static_cast<int>(j.degree().value()));
      for (int r = 0; r < rank; ++r)
        entries[r].push_back(r == k ? j : Polynomial::zero(R));
    }
  return GradedModule(GradedMatrix(target, FreeModule{R, twists}, entries));
}

}  // namespace regalia
