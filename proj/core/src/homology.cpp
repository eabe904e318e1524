#include "regalia/homology.hpp"

#include <stdexcept>

namespace regalia {

Subquotient::Subquotient(GradedMatrix num, GradedMatrix den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (!(num_.target() == den_.target()))
    throw std::invalid_argument("Subquotient: numerator/denominator ambient mismatch");
  const SubmoduleGB& ngb = num_gb();
  for (int c = 0; c < den_.cols(); ++c)
    if (!submodule_contains(ngb, den_.column(c)))
      throw std::invalid_argument("Subquotient: denominator not inside numerator");
}

Subquotient Subquotient::whole(FreeModule f) {
  GradedMatrix id = GradedMatrix::identity(f);
  GradedMatrix zero(f, FreeModule{f.ring, {}});
  return Subquotient(std::move(id), std::move(zero));
}

const SubmoduleGB& Subquotient::num_gb() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->num_gb)
    cache_->num_gb = std::make_shared<SubmoduleGB>(submodule_groebner(num_));
  return *cache_->num_gb;
}

const SubmoduleGB& Subquotient::den_gb() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->den_gb)
    cache_->den_gb = std::make_shared<SubmoduleGB>(submodule_groebner(den_));
  return *cache_->den_gb;
}

long long Subquotient::hf(int degree) const {
  // HF(N/D) = HF(F/D) - HF(F/N).
  return coker_hf(den_gb(), degree) - coker_hf(num_gb(), degree);
}

HilbertData Subquotient::hilbert(int lo, int hi) const {
  if (lo > hi) throw std::invalid_argument("Subquotient::hilbert: empty window");
  HilbertData data;
  data.lo = lo;
  data.hi = hi;
  for (int d = lo; d <= hi; ++d) data.values.push_back(hf(d));
  data.dim = dim();
  data.indeg = indeg();
  return data;
}

bool Subquotient::is_zero() const {
  const SubmoduleGB& dgb = den_gb();
  for (int c = 0; c < num_.cols(); ++c)
    if (!submodule_contains(dgb, num_.column(c))) return false;
  return true;
}

ExtInt Subquotient::dim() const { return to_module().dim(); }

ExtInt Subquotient::indeg() const { return to_module().indeg(); }

const GradedModule& Subquotient::to_module() const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->mod) return *cache_->mod;
  }
  // Generators = columns of num; relations among them = preimage of den.
  GradedModule m{preimage_matrix(num_, den_)};
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->mod) cache_->mod = std::make_shared<GradedModule>(std::move(m));
  return *cache_->mod;
}

namespace {

// Identity on the free module F, as a graded matrix (shared helper).
GradedMatrix id_on(const FreeModule& f) { return GradedMatrix::identity(f); }

}  // namespace

Subquotient homology_with_coefficients(const ChainComplex& C, const GradedModule& M,
                                       int i) {
  if (i < 0) throw std::invalid_argument("homology_with_coefficients: negative index");
  const RingPtr& ring = C.ring();
  if (!same_ring(ring, M.ring()))
    throw std::invalid_argument("homology_with_coefficients: ring mismatch");
  const GradedMatrix& A = M.presentation();
  const FreeModule& G0 = A.target();
  if (i > C.length()) {
    FreeModule empty{ring, {}};
    return Subquotient::whole(empty);
  }
  FreeModule ambient = tensor_modules(C.module(i), G0);

  // Cycles: everything if i is the bottom, else preimage of the relations
  // block of (C_{i-1} (x) M) under d_i (x) id.
  GradedMatrix num = id_on(ambient);
  if (i >= 1) {
    GradedMatrix di = kronecker(C.d(i), id_on(G0));
    GradedMatrix rels = kronecker(id_on(C.module(i - 1)), A);
    num = preimage_matrix(di, rels);
  }
  // Boundaries plus coefficient relations.
  GradedMatrix den = kronecker(id_on(C.module(i)), A);
  if (i < C.length()) {
    GradedMatrix bd = kronecker(C.d(i + 1), id_on(G0));
    den = bd.concat_columns(den);
  }
  return Subquotient(std::move(num), std::move(den));
}

Subquotient complex_homology(const ChainComplex& C, int i) {
  return homology_with_coefficients(
      C, GradedModule::free_module(FreeModule{C.ring(), {0}}), i);
}

Subquotient tor_multi(const std::vector<GradedModule>& mods, int i, int cap) {
  if (mods.empty()) throw std::invalid_argument("tor_multi: empty module list");
  if (i < 0) throw std::invalid_argument("tor_multi: negative index");
  const RingPtr& ring = mods.front().ring();
  for (const auto& m : mods)
    if (!same_ring(m.ring(), ring)) throw std::invalid_argument("tor_multi: ring mismatch");
  if (mods.size() == 1) {
    ChainComplex trivial(FreeModule{ring, {0}});
    return homology_with_coefficients(trivial, mods[0], i);
  }
  std::vector<ChainComplex> complexes;
  for (std::size_t k = 0; k + 1 < mods.size(); ++k)
    complexes.push_back(mods[k].resolution(cap).complex);
  ChainComplex t = tensor_complexes(complexes);
  return homology_with_coefficients(t, mods.back(), i);
}

Subquotient tor1_cycles(const std::vector<Ideal>& ideals) {
  if (ideals.size() < 2) throw std::invalid_argument("tor1_cycles: need at least two ideals");
  const RingPtr& ring = ideals.front().ring();
  for (const auto& I : ideals)
    if (!same_ring(I.ring(), ring)) throw std::invalid_argument("tor1_cycles: ring mismatch");
  int s = static_cast<int>(ideals.size());
  Polynomial zero = Polynomial::zero(ring);

  // Concatenated generator row and the block-diagonal placement map.
  std::vector<int> row_twists;
  std::vector<Polynomial> row_entries;
  for (const auto& I : ideals)
    for (const auto& g : I.gens()) {
      row_twists.push_back(static_cast<int>(g.degree().value()));
      row_entries.push_back(g);
    }
  GradedMatrix row(FreeModule{ring, {0}}, FreeModule{ring, row_twists}, {row_entries});

  std::vector<int> szero(s, 0);
  FreeModule ambient{ring, szero};
  GradedMatrix blockdiag(ambient, row.source());
  {
    int col = 0;
    for (int k = 0; k < s; ++k)
      for (const auto& g : ideals[k].gens()) {
        blockdiag.set_entry(k, col, g);
        ++col;
      }
  }
  GradedMatrix syz = syzygy_matrix(row);
  GradedMatrix num = blockdiag * syz;

  // Denominator: pairwise products in two slots with opposite signs.
  std::vector<int> den_twists;
  std::vector<std::vector<Polynomial>> den_entries(s);
  for (int a = 0; a < s; ++a)
    for (int b = a + 1; b < s; ++b)
      for (const auto& f : ideals[a].gens())
        for (const auto& g : ideals[b].gens()) {
          Polynomial prod = f * g;
          den_twists.push_back(static_cast<int>(prod.degree().value()));
          for (int k = 0; k < s; ++k)
            den_entries[k].push_back(k == a ? prod : (k == b ? zero - prod : zero));
        }
  GradedMatrix den(ambient, FreeModule{ring, den_twists}, den_entries);
  return Subquotient(std::move(num), std::move(den));
}

Subquotient koszul_homology(const std::vector<Polynomial>& forms,
                            const GradedModule& M, int i) {
  ChainComplex k = koszul_complex(M.ring(), forms);
  return homology_with_coefficients(k, M, i);
}

std::vector<Subquotient> ext_modules(const GradedModule& M, int dual_twist) {
  const RingPtr& ring = M.ring();
  if (!ring->is_polynomial_ring())
    throw std::invalid_argument("ext_modules: restrict to the ambient polynomial ring first");
  const Resolution& res = M.resolution();
  const ChainComplex& F = res.complex;
  int L = F.length();

  // Dual of F_i: Hom(R(-a), R(-N)) = R(-(N - a)).
  auto dual_of = [&](int i) {
    std::vector<int> t;
    for (int a : F.module(i).twists) t.push_back(dual_twist - a);
    return FreeModule{ring, t};
  };
  // Transpose of d_i as a map dual(F_{i-1}) -> dual(F_i).
  auto transpose_d = [&](int i) {
    FreeModule tgt = dual_of(i), src = dual_of(i - 1);
    GradedMatrix t(tgt, src);
    const GradedMatrix& d = F.d(i);
    for (int r = 0; r < d.rows(); ++r)
      for (int c = 0; c < d.cols(); ++c)
        if (!d.entry(r, c).is_zero()) t.set_entry(c, r, d.entry(r, c));
    return t;
  };

  std::vector<Subquotient> ext;
  for (int k = 0; k <= L; ++k) {
    FreeModule ambient = dual_of(k);
    GradedMatrix num = k < L ? syzygy_matrix(transpose_d(k + 1))
                             : GradedMatrix::identity(ambient);
    GradedMatrix den = k >= 1 ? transpose_d(k)
                              : GradedMatrix(ambient, FreeModule{ring, {}});
    ext.emplace_back(std::move(num), std::move(den));
  }
  return ext;
}

}  // namespace regalia
