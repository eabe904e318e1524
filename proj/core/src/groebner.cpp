#include "regalia/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace regalia {

bool modterm_less(const ModTerm& a, const ModTerm& b) {
  if (a.comp != b.comp) return a.comp > b.comp;  // lower component index is larger
  return a.mono < b.mono;
}

ExtInt modvec_degree(const ModVec& f, const std::vector<int>& twists) {
  if (f.empty()) return ExtInt::neg_inf();
  long long d = f.front().mono.degree() + twists.at(f.front().comp);
  for (const auto& t : f)
    if (t.mono.degree() + twists.at(t.comp) != d)
      throw std::invalid_argument("modvec_degree: inhomogeneous module element");
  return ExtInt(d);
}

namespace {

struct Engine {
  const CoefficientField& k;

  bool term_eq_pos(const ModTerm& a, const ModTerm& b) const {
    return a.comp == b.comp && a.mono == b.mono;
  }

  // f - c * x^m * g, both sorted descending; result sorted descending.
  ModVec axpy(const ModVec& f, const Scalar& c, const Monomial& m, const ModVec& g) const {
    ModVec out;
    out.reserve(f.size() + g.size());
    size_t i = 0, j = 0;
    while (i < f.size() || j < g.size()) {
      bool take_f;
      ModTerm gt;
      if (j < g.size()) {
        gt = ModTerm{k.mul(c, g[j].coeff), g[j].mono * m, g[j].comp};
      }
      if (i >= f.size())
        take_f = false;
      else if (j >= g.size())
        take_f = true;
      else if (term_eq_pos(f[i], gt)) {
        Scalar s = k.sub(f[i].coeff, gt.coeff);
        if (!k.is_zero(s)) out.push_back(ModTerm{s, f[i].mono, f[i].comp});
        ++i;
        ++j;
        continue;
      } else {
        take_f = modterm_less(gt, f[i]);  // f[i] larger => take it first
      }
      if (take_f) {
        out.push_back(f[i]);
        ++i;
      } else {
        gt.coeff = k.neg(gt.coeff);
        out.push_back(gt);
        ++j;
      }
    }
    return out;
  }

  ModVec monic(ModVec f) const {
    if (f.empty()) return f;
    Scalar inv = k.inv(f.front().coeff);
    for (auto& t : f) t.coeff = k.mul(t.coeff, inv);
    return f;
  }

  // Full normal form: every term of the result is irreducible against gb.
  ModVec normal_form(ModVec f, const std::vector<ModVec>& gb,
                     const std::map<int, std::vector<int>>& by_comp,
                     int skip = -1) const {
    ModVec out;
    while (!f.empty()) {
      const ModTerm& t = f.front();
      int reducer = -1;
      auto it = by_comp.find(t.comp);
      if (it != by_comp.end()) {
        for (int gi : it->second) {
          if (gi == skip) continue;
          if (gb[gi].front().mono.divides(t.mono)) {
            reducer = gi;
            break;
          }
        }
      }
      if (reducer < 0) {
        out.push_back(t);
        f.erase(f.begin());
      } else {
        const ModVec& g = gb[reducer];
        Scalar c = k.div(t.coeff, g.front().coeff);
        Monomial m = g.front().mono.divide_into(t.mono);
        f = axpy(f, c, m, g);
      }
    }
    return out;
  }
};

// Deterministic comparison of whole module elements (used only for sorting
// inputs and outputs; ties never matter mathematically).
bool modvec_less(const ModVec& a, const ModVec& b) {
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    if (!(a[i].comp == b[i].comp && a[i].mono == b[i].mono))
      return modterm_less(a[i], b[i]);
  }
  return a.size() < b.size();
}

struct Pair {
  long long deg;  // degree of lcm of leading monomials (same component)
  int comp;
  Monomial lcm_mono;
  int i, j;
};

struct PairLess {
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.deg != b.deg) return a.deg < b.deg;
    if (a.comp != b.comp) return a.comp < b.comp;
    if (a.lcm_mono != b.lcm_mono) return a.lcm_mono < b.lcm_mono;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

}  // namespace

std::vector<ModVec> module_groebner(const RingPtr& poly_ring, int rank,
                                    std::vector<ModVec> gens) {
  if (!poly_ring->is_polynomial_ring())
    throw std::invalid_argument("module_groebner: expects a polynomial ring");
  Engine E{poly_ring->field()};

  std::vector<ModVec> G;
  for (auto& g : gens) {
    for (const auto& t : g)
      if (t.comp < 0 || t.comp >= rank)
        throw std::out_of_range("module_groebner: component out of range");
    if (!g.empty()) G.push_back(E.monic(std::move(g)));
  }
  std::stable_sort(G.begin(), G.end(), modvec_less);

  auto make_index = [&](const std::vector<ModVec>& basis) {
    std::map<int, std::vector<int>> by_comp;
    for (int i = 0; i < static_cast<int>(basis.size()); ++i)
      by_comp[basis[i].front().comp].push_back(i);
    return by_comp;
  };

  std::set<Pair, PairLess> pending;
  auto add_pairs_for = [&](int t) {
    const ModTerm& lt = G[t].front();
    for (int i = 0; i < t; ++i) {
      const ModTerm& li = G[i].front();
      if (li.comp != lt.comp) continue;
      // Coprimality criterion: valid for ring elements (rank-one ambient).
      if (rank == 1 && coprime(li.mono, lt.mono)) continue;
      Monomial L = lcm(li.mono, lt.mono);
      pending.insert(Pair{L.degree(), lt.comp, L, i, t});
    }
  };
  for (int t = 0; t < static_cast<int>(G.size()); ++t) add_pairs_for(t);

  auto in_pending = [&](int i, int j, const ModVec& gi, const ModVec& gj) {
    Monomial L = lcm(gi.front().mono, gj.front().mono);
    return pending.count(Pair{L.degree(), gi.front().comp, L, std::min(i, j), std::max(i, j)}) > 0;
  };

  while (!pending.empty()) {
    Pair p = *pending.begin();
    pending.erase(pending.begin());

    // Chain criterion: skip when some other leading term divides the pair lcm
    // and both flanking pairs have already been handled.
    bool skip = false;
    for (int m = 0; m < static_cast<int>(G.size()) && !skip; ++m) {
      if (m == p.i || m == p.j) continue;
      const ModTerm& lm = G[m].front();
      if (lm.comp != p.comp || !lm.mono.divides(p.lcm_mono)) continue;
      if (!in_pending(p.i, m, G[p.i], G[m]) && !in_pending(p.j, m, G[p.j], G[m])) skip = true;
    }
    if (skip) continue;

    const ModVec& f = G[p.i];
    const ModVec& g = G[p.j];
    // S-pair: both leading terms scaled to the lcm, then subtracted.
    Monomial mf = f.front().mono.divide_into(p.lcm_mono);
    ModVec s = E.axpy(ModVec{}, E.k.neg(E.k.one()), mf, f);  // x^mf * f
    Monomial mg = g.front().mono.divide_into(p.lcm_mono);
    s = E.axpy(s, E.k.one(), mg, g);  // x^mf*f - x^mg*g  (both monic)

    auto by_comp = make_index(G);
    ModVec h = E.normal_form(std::move(s), G, by_comp);
    if (h.empty()) continue;
    G.push_back(E.monic(std::move(h)));
    add_pairs_for(static_cast<int>(G.size()) - 1);
  }

  // Minimalize: drop elements whose leading term is divisible by another's.
  std::vector<int> keep;
  for (int i = 0; i < static_cast<int>(G.size()); ++i) {
    bool redundant = false;
    for (int j = 0; j < static_cast<int>(G.size()) && !redundant; ++j) {
      if (i == j) continue;
      const ModTerm& li = G[i].front();
      const ModTerm& lj = G[j].front();
      if (li.comp != lj.comp || !lj.mono.divides(li.mono)) continue;
      if (li.mono == lj.mono) {
        // Equal leading terms: keep the earlier one.
        redundant = j < i;
      } else {
        redundant = true;
      }
    }
    if (!redundant) keep.push_back(i);
  }
  std::vector<ModVec> minimal;
  minimal.reserve(keep.size());
  for (int i : keep) minimal.push_back(G[i]);

  // Inter-reduce tails; leading terms are untouched by construction.
  auto by_comp = make_index(minimal);
  std::vector<ModVec> reduced(minimal.size());
  for (int i = 0; i < static_cast<int>(minimal.size()); ++i)
    reduced[i] = E.monic(E.normal_form(minimal[i], minimal, by_comp, i));

  std::stable_sort(reduced.begin(), reduced.end(), modvec_less);
  return reduced;
}

ModVec module_normal_form(const RingPtr& poly_ring, ModVec f, const std::vector<ModVec>& gb) {
  if (!poly_ring->is_polynomial_ring())
    throw std::invalid_argument("module_normal_form: expects a polynomial ring");
  Engine E{poly_ring->field()};
  std::map<int, std::vector<int>> by_comp;
  for (int i = 0; i < static_cast<int>(gb.size()); ++i)
    by_comp[gb[i].front().comp].push_back(i);
  std::sort(f.begin(), f.end(), [](const ModTerm& a, const ModTerm& b) { return modterm_less(b, a); });
  return E.normal_form(std::move(f), gb, by_comp);
}

std::vector<Polynomial> poly_groebner(const RingPtr& poly_ring,
                                      const std::vector<Polynomial>& gens) {
  std::vector<ModVec> v;
  v.reserve(gens.size());
  for (const auto& g : gens) {
    if (!same_ring(g.ring(), poly_ring))
      throw std::invalid_argument("poly_groebner: generator over wrong ring");
    v.push_back(column_to_modvec({g}));
  }
  auto gb = module_groebner(poly_ring, 1, std::move(v));
  std::vector<Polynomial> out;
  out.reserve(gb.size());
  for (const auto& g : gb) out.push_back(modvec_to_column(poly_ring, 1, g)[0]);
  return out;
}

Polynomial poly_normal_form(const Polynomial& f, const std::vector<Polynomial>& gb) {
  const RingPtr& ring = f.ring();
  std::vector<ModVec> v;
  v.reserve(gb.size());
  for (const auto& g : gb) v.push_back(column_to_modvec({g}));
  ModVec r = module_normal_form(ring, column_to_modvec({f}), v);
  return modvec_to_column(ring, 1, r)[0];
}

ModVec column_to_modvec(const std::vector<Polynomial>& column) {
  ModVec v;
  for (int comp = 0; comp < static_cast<int>(column.size()); ++comp)
    for (const auto& t : column[comp].terms())
      v.push_back(ModTerm{t.coeff, t.mono, comp});
  std::sort(v.begin(), v.end(), [](const ModTerm& a, const ModTerm& b) { return modterm_less(b, a); });
  return v;
}

std::vector<Polynomial> modvec_to_column(const RingPtr& ring, int rank, const ModVec& v) {
  std::vector<std::vector<Term>> per_comp(rank);
  for (const auto& t : v) per_comp.at(t.comp).push_back(Term{t.coeff, t.mono});
  std::vector<Polynomial> col;
  col.reserve(rank);
  for (int c = 0; c < rank; ++c)
    col.push_back(Polynomial::from_terms(ring, std::move(per_comp[c])));
  return col;
}

SubmoduleGB submodule_groebner(const GradedMatrix& A) {
  const RingPtr& ring = A.target().ring;
  RingPtr ambient = ring->ambient_or_self();
  std::vector<ModVec> gens;
  for (int c = 0; c < A.cols(); ++c) {
    std::vector<Polynomial> col;
    col.reserve(A.rows());
    for (int r = 0; r < A.rows(); ++r) col.push_back(ring->lift(A.entry(r, c)));
    gens.push_back(column_to_modvec(col));
  }
  if (!ring->is_polynomial_ring()) {
    for (int r = 0; r < A.rows(); ++r)
      for (const auto& g : ring->modulus_groebner()) {
        std::vector<Polynomial> col(A.rows(), Polynomial::zero(ambient));
        col[r] = g;
        gens.push_back(column_to_modvec(col));
      }
  }
  SubmoduleGB out;
  out.ambient = ambient;
  out.twists = A.target().twists;
  out.gb = module_groebner(ambient, std::max(A.rows(), 1), std::move(gens));
  return out;
}

bool submodule_contains(const SubmoduleGB& S, const std::vector<Polynomial>& column) {
  std::vector<Polynomial> lifted;
  lifted.reserve(column.size());
  for (const auto& f : column) {
    RingPtr r = f.ring();
    lifted.push_back(r && !r->is_polynomial_ring() ? r->lift(f) : f);
  }
  ModVec v = column_to_modvec(lifted);
  return module_normal_form(S.ambient, std::move(v), S.gb).empty();
}

namespace {

// Core elimination routine: generators of {v in source(A) : A v lies in
// im(B) + J * target}.  Tracked block = target components 0..t-1; unit tags
// for the columns of A live in components t..t+s-1.  Columns of B and the
// quotient relations are adjoined untagged.
GradedMatrix preimage_via_elimination(const GradedMatrix& A, const GradedMatrix* B) {
  const RingPtr& ring = A.target().ring;
  RingPtr ambient = ring->ambient_or_self();
  const int t = A.rows();
  const int s = A.cols();

  auto lift_col = [&](const GradedMatrix& M, int c) {
    std::vector<Polynomial> col;
    col.reserve(M.rows());
    for (int r = 0; r < M.rows(); ++r) col.push_back(ring->lift(M.entry(r, c)));
    return col;
  };

  std::vector<ModVec> gens;
  for (int c = 0; c < s; ++c) {
    std::vector<Polynomial> col = lift_col(A, c);
    ModVec v = column_to_modvec(col);
    v.push_back(ModTerm{ambient->field().one(), Monomial::one(ambient->nvars()), t + c});
    std::sort(v.begin(), v.end(), [](const ModTerm& a, const ModTerm& b) { return modterm_less(b, a); });
    gens.push_back(std::move(v));
  }
  if (B) {
    for (int c = 0; c < B->cols(); ++c) gens.push_back(column_to_modvec(lift_col(*B, c)));
  }
  if (!ring->is_polynomial_ring()) {
    for (int r = 0; r < t; ++r)
      for (const auto& g : ring->modulus_groebner()) {
        std::vector<Polynomial> col(t, Polynomial::zero(ambient));
        col[r] = g;
        gens.push_back(column_to_modvec(col));
      }
  }

  auto gb = module_groebner(ambient, t + s, std::move(gens));

  // Position-over-term: an element whose leading term lies in the tag block
  // has no terms in the tracked block at all.
  std::vector<ModVec> kernel;
  for (const auto& g : gb)
    if (g.front().comp >= t) kernel.push_back(g);

  const std::vector<int>& src_twists = A.source().twists;
  std::vector<std::vector<Polynomial>> cols;
  std::vector<int> degs;
  for (const auto& g : kernel) {
    ModVec shifted;
    shifted.reserve(g.size());
    for (const auto& term : g)
      shifted.push_back(ModTerm{term.coeff, term.mono, term.comp - t});
    std::vector<Polynomial> col = modvec_to_column(ambient, s, shifted);
    // Project into the (possibly quotient) ring of A.
    std::vector<Polynomial> proj;
    proj.reserve(s);
    bool nonzero = false;
    ExtInt deg = ExtInt::neg_inf();
    for (int c = 0; c < s; ++c) {
      Polynomial f = ring->project(col[c]);
      if (!f.is_zero()) {
        nonzero = true;
        deg = max(deg, f.degree() + ExtInt(src_twists[c]));
      }
      proj.push_back(std::move(f));
    }
    if (!nonzero) continue;
    cols.push_back(std::move(proj));
    degs.push_back(static_cast<int>(deg.value()));
  }

  // Stable-sort columns by degree for a deterministic, readable presentation.
  std::vector<int> order(cols.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return degs[a] < degs[b]; });

  FreeModule syz{ring, {}};
  for (int i : order) syz.twists.push_back(degs[i]);
  std::vector<std::vector<Polynomial>> entries(s, std::vector<Polynomial>(cols.size(), Polynomial::zero(ring)));
  for (size_t j = 0; j < order.size(); ++j)
    for (int r = 0; r < s; ++r) entries[r][j] = cols[order[j]][r];
  return GradedMatrix(A.source(), std::move(syz), std::move(entries));
}

}  // namespace

GradedMatrix syzygy_matrix(const GradedMatrix& A) {
  return preimage_via_elimination(A, nullptr);
}

GradedMatrix preimage_matrix(const GradedMatrix& A, const GradedMatrix& B) {
  if (!(A.target() == B.target()))
    throw std::invalid_argument("preimage_matrix: target mismatch");
  return preimage_via_elimination(A, &B);
}

}  // namespace regalia
