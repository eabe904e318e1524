#include "regalia/complexes.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace regalia {

ChainComplex::ChainComplex(FreeModule f0) : modules_{std::move(f0)} {}

ChainComplex::ChainComplex(std::vector<FreeModule> modules,
                           std::vector<GradedMatrix> diffs)
    : modules_(std::move(modules)), diffs_(std::move(diffs)) {
  if (modules_.empty()) throw std::invalid_argument("ChainComplex: no modules");
  if (diffs_.size() + 1 != modules_.size())
    throw std::invalid_argument("ChainComplex: need one differential per step");
  for (std::size_t i = 0; i < diffs_.size(); ++i) {
    if (!(diffs_[i].source() == modules_[i + 1]) || !(diffs_[i].target() == modules_[i]))
      throw std::invalid_argument("ChainComplex: differential endpoints mismatch");
  }
  for (std::size_t i = 0; i + 1 < diffs_.size(); ++i) {
    if (!(diffs_[i] * diffs_[i + 1]).is_zero())
      throw std::invalid_argument("ChainComplex: d*d != 0");
  }
}

std::string ChainComplex::str() const {
  std::ostringstream os;
  for (int i = 0; i <= length(); ++i) {
    if (i) os << " <- ";
    os << "F" << i << "(rank " << modules_[i].rank() << ")";
  }
  return os.str();
}

namespace {

// All k-subsets of {0..s-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int s, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // Iterative lexicographic enumeration.
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > s) return out;
  for (;;) {
    out.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == s - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    if (k == 0) break;
  }
  if (k == 0) out = {{}};
  return out;
}

int subset_index(const std::vector<std::vector<int>>& all, const std::vector<int>& s) {
  auto it = std::find(all.begin(), all.end(), s);
  return static_cast<int>(it - all.begin());
}

}  // namespace

ChainComplex koszul_complex(const RingPtr& ring, const std::vector<Polynomial>& forms) {
  int s = static_cast<int>(forms.size());
  std::vector<int> degs;
  for (const auto& f : forms) {
    if (!same_ring(f.ring(), ring)) throw std::invalid_argument("koszul_complex: ring mismatch");
    if (f.is_zero() || !f.is_homogeneous())
      throw std::invalid_argument("koszul_complex: forms must be nonzero homogeneous");
    degs.push_back(static_cast<int>(f.degree().value()));
  }
  std::vector<FreeModule> modules;
  std::vector<std::vector<std::vector<int>>> bases;  // per homological degree
  for (int k = 0; k <= s; ++k) {
    auto subs = subsets(s, k);
    std::vector<int> twists;
    for (const auto& sub : subs) {
      int t = 0;
      for (int i : sub) t += degs[i];
      twists.push_back(t);
    }
    bases.push_back(subs);
    modules.push_back(FreeModule{ring, twists});
  }
  std::vector<GradedMatrix> diffs;
  for (int k = 1; k <= s; ++k) {
    GradedMatrix d(modules[k - 1], modules[k]);
    for (int c = 0; c < static_cast<int>(bases[k].size()); ++c) {
      const auto& sub = bases[k][c];
      for (int j = 0; j < k; ++j) {
        std::vector<int> omitted = sub;
        omitted.erase(omitted.begin() + j);
        int r = subset_index(bases[k - 1], omitted);
        Polynomial f = forms[sub[j]];
        if (j % 2 == 1) f = Polynomial::zero(ring) - f;
        d.set_entry(r, c, f);
      }
    }
    diffs.push_back(std::move(d));
  }
  return ChainComplex(std::move(modules), std::move(diffs));
}

ChainComplex tensor_pair(const ChainComplex& C, const ChainComplex& D) {
  if (!same_ring(C.ring(), D.ring()))
    throw std::invalid_argument("tensor_pair: ring mismatch");
  const RingPtr& ring = C.ring();
  int lc = C.length(), ld = D.length();
  int total = lc + ld;
  // Component layout of T_l: blocks (i, j = l - i) with i ascending,
  // inside a block pair (a, b) at a*rank(D_j)+b.
  auto block_start = [&](int l, int i) {
    int off = 0;
    for (int k = std::max(0, l - ld); k < i; ++k)
      off += C.module(k).rank() * D.module(l - k).rank();
    return off;
  };
  std::vector<FreeModule> modules;
  for (int l = 0; l <= total; ++l) {
    std::vector<int> twists;
    for (int i = std::max(0, l - ld); i <= std::min(l, lc); ++i) {
      FreeModule blk = tensor_modules(C.module(i), D.module(l - i));
      twists.insert(twists.end(), blk.twists.begin(), blk.twists.end());
    }
    modules.push_back(FreeModule{ring, twists});
  }
  std::vector<GradedMatrix> diffs;
  for (int l = 1; l <= total; ++l) {
    GradedMatrix d(modules[l - 1], modules[l]);
    for (int i = std::max(0, l - ld); i <= std::min(l, lc); ++i) {
      int j = l - i;
      int src0 = block_start(l, i);
      // d_C (x) id : block (i, j) -> block (i-1, j).
      if (i >= 1) {
        int dst0 = block_start(l - 1, i - 1);
        GradedMatrix blk = kronecker(C.d(i), GradedMatrix::identity(D.module(j)));
        for (int r = 0; r < blk.rows(); ++r)
          for (int c = 0; c < blk.cols(); ++c)
            if (!blk.entry(r, c).is_zero()) d.set_entry(dst0 + r, src0 + c, blk.entry(r, c));
      }
      // (-1)^i id (x) d_D : block (i, j) -> block (i, j-1).
      if (j >= 1) {
        int dst0 = block_start(l - 1, i);
        GradedMatrix blk = kronecker(GradedMatrix::identity(C.module(i)), D.d(j));
        for (int r = 0; r < blk.rows(); ++r)
          for (int c = 0; c < blk.cols(); ++c) {
            Polynomial e = blk.entry(r, c);
            if (e.is_zero()) continue;
            if (i % 2 == 1) e = Polynomial::zero(ring) - e;
            d.set_entry(dst0 + r, src0 + c, e);
          }
      }
    }
    diffs.push_back(std::move(d));
  }
  return ChainComplex(std::move(modules), std::move(diffs));
}

ChainComplex tensor_complexes(const std::vector<ChainComplex>& cs) {
  if (cs.empty()) throw std::invalid_argument("tensor_complexes: empty list");
  ChainComplex t = cs.front();
  for (std::size_t i = 1; i < cs.size(); ++i) t = tensor_pair(t, cs[i]);
  return t;
}

namespace {

// Positions i (1-based differential index), r, c of a unit entry, or i = -1.
struct UnitPos {
  int i = -1, r = 0, c = 0;
};

UnitPos find_unit(const ChainComplex& c) {
  for (int i = 1; i <= c.length(); ++i) {
    const GradedMatrix& d = c.d(i);
    for (int r = 0; r < d.rows(); ++r)
      for (int col = 0; col < d.cols(); ++col) {
        const Polynomial& e = d.entry(r, col);
        if (!e.is_zero() && e.degree() == ExtInt(0)) return {i, r, col};
      }
  }
  return {};
}

std::vector<int> all_but(int n, int skip) {
  std::vector<int> idx;
  for (int k = 0; k < n; ++k)
    if (k != skip) idx.push_back(k);
  return idx;
}

}  // namespace

ChainComplex minimalize(ChainComplex c) {
  for (;;) {
    UnitPos u = find_unit(c);
    if (u.i < 0) return c;
    int L = c.length();
    const GradedMatrix& A = c.d(u.i);
    Polynomial unit = A.entry(u.r, u.c);
    // Rebuild the three affected differentials; the rest survive unchanged.
    std::vector<FreeModule> modules;
    for (int i = 0; i <= L; ++i) modules.push_back(c.module(i));
    std::vector<GradedMatrix> diffs;
    for (int i = 1; i <= L; ++i) diffs.push_back(c.d(i));

    const RingPtr& ring = c.ring();
    Scalar inv = ring->field().inv(unit.leading_coeff());
    std::vector<int> keep_rows = all_but(A.rows(), u.r);
    std::vector<int> keep_cols = all_but(A.cols(), u.c);

    // Schur complement on A.
    GradedMatrix Ap = A.submatrix(keep_rows, keep_cols);
    for (int r = 0; r < Ap.rows(); ++r)
      for (int col = 0; col < Ap.cols(); ++col) {
        const Polynomial& arc = A.entry(keep_rows[r], u.c);
        const Polynomial& acr = A.entry(u.r, keep_cols[col]);
        if (arc.is_zero() || acr.is_zero()) continue;
        Ap.set_entry(r, col, Ap.entry(r, col) - arc.scaled(inv) * acr);
      }
    diffs[u.i - 1] = Ap;
    // Next differential loses row u.c.
    if (u.i < L) {
      const GradedMatrix& B = c.d(u.i + 1);
      diffs[u.i] = B.submatrix(all_but(B.rows(), u.c), all_but(B.cols(), -1));
    }
    // Previous differential loses column u.r.
    if (u.i > 1) {
      const GradedMatrix& P = c.d(u.i - 1);
      diffs[u.i - 2] = P.submatrix(all_but(P.rows(), -1), all_but(P.cols(), u.r));
    }
    FreeModule tgt = modules[u.i - 1];
    FreeModule src = modules[u.i];
    std::vector<int> tgt_twists, src_twists;
    for (int k : keep_rows) tgt_twists.push_back(tgt.twist(k));
    for (int k : keep_cols) src_twists.push_back(src.twist(k));
    modules[u.i - 1] = FreeModule{ring, tgt_twists};
    modules[u.i] = FreeModule{ring, src_twists};

    // Drop trailing zero-rank modules so resolutions end cleanly.
    while (modules.size() > 1 && modules.back().rank() == 0) {
      modules.pop_back();
      diffs.pop_back();
    }
    c = ChainComplex(std::move(modules), std::move(diffs));
  }
}

}  // namespace regalia
