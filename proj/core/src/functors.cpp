#include "regalia/functors.hpp"

#include "regalia/groebner.hpp"
#include "regalia/hilbert.hpp"
#include "regalia/resolution.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>

namespace regalia {

namespace {

long long frobenius_q(const RingPtr& ring, int e) {
  long long p = ring->field().characteristic();
  if (p == 0)
    throw std::invalid_argument("frobenius: requires prime characteristic");
  if (e < 0) throw std::invalid_argument("frobenius: exponent must be >= 0");
  long long q = 1;
  for (int t = 0; t < e; ++t) {
    if (q > (1LL << 40) / p)
      throw std::overflow_error("frobenius: p^e out of range");
    q *= p;
  }
  return q;
}

std::vector<int> scaled_twists(const std::vector<int>& twists, long long q) {
  std::vector<int> out;
  out.reserve(twists.size());
  for (int t : twists) {
    long long s = q * static_cast<long long>(t);
    if (s > std::numeric_limits<int>::max() || s < std::numeric_limits<int>::min())
      throw std::overflow_error("frobenius: scaled twist out of range");
    out.push_back(static_cast<int>(s));
  }
  return out;
}

}  // namespace

GradedMatrix frobenius_matrix(const GradedMatrix& A, int e) {
  long long q = frobenius_q(A.target().ring, e);
  if (e == 0) return A;
  FreeModule target{A.target().ring, scaled_twists(A.target().twists, q)};
  FreeModule source{A.source().ring, scaled_twists(A.source().twists, q)};
  GradedMatrix out(std::move(target), std::move(source));
  for (int r = 0; r < A.rows(); ++r)
    for (int c = 0; c < A.cols(); ++c)
      if (!A.entry(r, c).is_zero())
        out.set_entry(r, c, A.entry(r, c).frobenius_pow(q));
  return out;
}

ChainComplex frobenius_complex(const ChainComplex& C, int e) {
  long long q = frobenius_q(C.ring(), e);
  if (e == 0) return C;
  std::vector<FreeModule> modules;
  modules.reserve(C.length() + 1);
  for (int i = 0; i <= C.length(); ++i)
    modules.push_back(FreeModule{C.ring(), scaled_twists(C.module(i).twists, q)});
  std::vector<GradedMatrix> diffs;
  diffs.reserve(C.length());
  for (int i = 1; i <= C.length(); ++i) diffs.push_back(frobenius_matrix(C.d(i), e));
  return ChainComplex(std::move(modules), std::move(diffs));
}

GradedModule frobenius_power(const GradedModule& M, int e) {
  frobenius_q(M.ring(), e);  // validates characteristic and exponent
  if (e == 0) return M;
  return GradedModule(frobenius_matrix(M.presentation(), e));
}

FrobeniusTor frobenius_tor(const GradedModule& M, int e, int i, int cap) {
  frobenius_q(M.ring(), e);
  if (i < 0) throw std::invalid_argument("frobenius_tor: negative index");
  const Resolution& res = M.resolution(cap);
  ChainComplex C = frobenius_complex(res.complex, e);
  FrobeniusTor out{complex_homology(C, i), res.truncated && i >= res.length()};
  return out;
}

PowerKernel power_kernel(const Ideal& I, int ell) {
  if (ell < 2) throw std::invalid_argument("power_kernel: ell must be >= 2");
  Ideal J = ideal_power(I, ell - 1);
  GradedMatrix row_i = generator_row(I);
  GradedMatrix row_j = generator_row(J);
  const FreeModule& fi = row_i.source();
  const FreeModule& fj = row_j.source();
  // Multiplication I (x) I^{ell-1} -> I^ell as the row of all products.
  GradedMatrix mult = kronecker(row_i, row_j);
  GradedMatrix num = syzygy_matrix(mult);
  GradedMatrix den = kronecker(syzygy_matrix(row_i), GradedMatrix::identity(fj))
                         .concat_columns(
                             kronecker(GradedMatrix::identity(fi), syzygy_matrix(row_j)));
  return PowerKernel{ell, Subquotient(std::move(num), std::move(den))};
}

KahlerModule kahler_module(const RingPtr& B) {
  int n = B->nvars();
  if (B->is_polynomial_ring()) {
    GradedModule omega = GradedModule::free_module(FreeModule{B, std::vector<int>(n, 1)});
    return KahlerModule{B, std::move(omega), Subquotient::whole(FreeModule{B, {}})};
  }
  const RingPtr& S = B->ambient();
  const std::vector<Polynomial>& hs = B->modulus_gens();
  int m = static_cast<int>(hs.size());
  FreeModule target{B, std::vector<int>(n, 1)};
  std::vector<int> gen_degrees;
  gen_degrees.reserve(hs.size());
  for (const Polynomial& h : hs)
    gen_degrees.push_back(static_cast<int>(h.degree().value()));
  FreeModule conormal_free{B, gen_degrees};

  GradedMatrix jac(target, conormal_free);
  for (int a = 0; a < m; ++a)
    for (int v = 0; v < n; ++v) {
      Polynomial d = B->project(hs[a].derivative(v));
      if (!d.is_zero()) jac.set_entry(v, a, std::move(d));
    }
  GradedModule omega(jac);

  // K = ker(I/I^2 -> B(-1)^n): cycles of the Jacobian over B, modulo the
  // relations of I/I^2 itself (ambient syzygies of the generators of I,
  // projected to B; Koszul relations are among them).
  GradedMatrix num = syzygy_matrix(jac);
  GradedMatrix ambient_syz = syzygy_matrix(generator_row(Ideal(S, hs)));
  GradedMatrix den(conormal_free, FreeModule{B, ambient_syz.source().twists});
  for (int r = 0; r < ambient_syz.rows(); ++r)
    for (int c = 0; c < ambient_syz.cols(); ++c) {
      Polynomial f = B->project(ambient_syz.entry(r, c));
      if (!f.is_zero()) den.set_entry(r, c, std::move(f));
    }
  return KahlerModule{B, std::move(omega), Subquotient(std::move(num), std::move(den))};
}

namespace {

using MinorKey = std::pair<std::uint64_t, std::uint64_t>;

std::uint64_t index_mask(const std::vector<int>& idx) {
  std::uint64_t m = 0;
  for (int i : idx) m |= (std::uint64_t{1} << i);
  return m;
}

Polynomial minor_det(const std::vector<std::vector<Polynomial>>& entries,
                     const RingPtr& ring, const std::vector<int>& rows,
                     const std::vector<int>& cols,
                     std::map<MinorKey, Polynomial>& memo) {
  if (rows.empty()) return Polynomial::constant(ring, 1);
  MinorKey key{index_mask(rows), index_mask(cols)};
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  Polynomial det = Polynomial::zero(ring);
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (size_t j = 0; j < cols.size(); ++j) {
    const Polynomial& pivot = entries[rows[0]][cols[j]];
    if (pivot.is_zero()) continue;
    std::vector<int> sub_cols;
    sub_cols.reserve(cols.size() - 1);
    for (size_t t = 0; t < cols.size(); ++t)
      if (t != j) sub_cols.push_back(cols[t]);
    Polynomial term = pivot * minor_det(entries, ring, sub_rows, sub_cols, memo);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  memo.emplace(key, det);
  return det;
}

void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  if (k > n) return;
  while (true) {
    fn(pick);
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int t = i + 1; t < k; ++t) pick[t] = pick[t - 1] + 1;
  }
}

}  // namespace

Ideal singular_locus_ideal(const RingPtr& S, bool assert_equidimensional,
                           bool* inseparability_caveat) {
  if (inseparability_caveat) *inseparability_caveat = false;
  if (S->is_polynomial_ring()) return Ideal::unit(S);
  const RingPtr& R = S->ambient();
  const std::vector<Polynomial>& gens = S->modulus_gens();
  if (gens.size() >= 2 && !assert_equidimensional)
    throw std::invalid_argument(
        "singular_locus_ideal: the Jacobian-criterion codimension test assumes the "
        "defining ideal is equidimensional; a hypersurface is automatically so, but "
        "with several defining equations the caller must assert equidimensionality");
  long long p = S->field().characteristic();
  if (p > 0) {
    long long max_deg = 0;
    for (const Polynomial& g : gens)
      max_deg = std::max(max_deg, g.degree().is_finite() ? g.degree().value() : 0);
    if (p <= max_deg && inseparability_caveat) *inseparability_caveat = true;
  }
  Ideal J(R, gens);
  ExtInt c = codim(J);
  if (!c.is_finite())
    throw std::invalid_argument("singular_locus_ideal: quotient by the unit ideal");
  int cc = static_cast<int>(c.value());
  int n = R->nvars();
  int m = static_cast<int>(gens.size());
  if (cc == 0) return Ideal::unit(R);

  std::vector<std::vector<Polynomial>> d(n);
  for (int v = 0; v < n; ++v) {
    d[v].reserve(gens.size());
    for (const Polynomial& g : gens) d[v].push_back(g.derivative(v));
  }
  std::vector<Polynomial> sing_gens = gens;
  if (cc <= n && cc <= m) {
    std::map<MinorKey, Polynomial> memo;
    for_each_subset(n, cc, [&](const std::vector<int>& rows) {
      for_each_subset(m, cc, [&](const std::vector<int>& cols) {
        Polynomial det = minor_det(d, R, rows, cols, memo);
        if (!det.is_zero()) sing_gens.push_back(std::move(det));
      });
    });
  }
  return Ideal(R, std::move(sing_gens));
}

SingLocus sing_locus_dim(const RingPtr& S, bool assert_equidimensional) {
  bool caveat = false;
  Ideal sing = singular_locus_ideal(S, assert_equidimensional, &caveat);
  return SingLocus{krull_dim(sing), caveat};
}

bool is_monomial_ideal(const Ideal& I) {
  for (const Polynomial& g : I.gens())
    if (g.terms().size() != 1) return false;
  return true;
}

std::vector<std::vector<int>> monomial_minimal_primes(const Ideal& I) {
  if (!is_monomial_ideal(I))
    throw std::invalid_argument("monomial_minimal_primes: non-monomial generator");
  int n = I.ring()->nvars();
  if (n > 20)
    throw std::invalid_argument("monomial_minimal_primes: too many variables");
  std::vector<std::uint32_t> supports;
  for (const Polynomial& g : I.gens()) {
    const Monomial& mono = g.terms().front().mono;
    std::uint32_t mask = 0;
    for (int v = 0; v < n; ++v)
      if (mono.exponent(v) > 0) mask |= (std::uint32_t{1} << v);
    if (mask == 0) return {};  // a unit generator: V(I) is empty
    supports.push_back(mask);
  }
  if (supports.empty()) return {{}};  // the zero ideal: one minimal prime, (0)

  std::vector<std::uint32_t> hitting;
  for (std::uint32_t cand = 0; cand < (std::uint32_t{1} << n); ++cand) {
    bool hits_all = true;
    for (std::uint32_t s : supports)
      if ((s & cand) == 0) {
        hits_all = false;
        break;
      }
    if (hits_all) hitting.push_back(cand);
  }
  std::vector<std::vector<int>> out;
  for (std::uint32_t cand : hitting) {
    bool minimal = true;
    for (std::uint32_t other : hitting)
      if (other != cand && (other & cand) == other) {
        minimal = false;
        break;
      }
    if (!minimal) continue;
    std::vector<int> vars;
    for (int v = 0; v < n; ++v)
      if (cand & (std::uint32_t{1} << v)) vars.push_back(v);
    out.push_back(std::move(vars));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

bool monomial_generic_ci(const Ideal& I) {
  std::vector<std::vector<int>> primes = monomial_minimal_primes(I);
  if (primes.empty()) return true;  // unit ideal: no components to test
  size_t min_size = primes.front().size();
  for (const auto& P : primes) min_size = std::min(min_size, P.size());
  int n = I.ring()->nvars();
  for (const auto& P : primes) {
    if (P.size() != min_size) continue;  // only top-dimensional components
    // Localize at P: variables outside P become units, so each monomial
    // generator restricts to its P-supported part.
    std::vector<Monomial> local;
    for (const Polynomial& g : I.gens()) {
      std::vector<int> e(n, 0);
      const Monomial& mono = g.terms().front().mono;
      for (int v : P) e[v] = mono.exponent(v);
      local.emplace_back(std::move(e));
    }
    std::sort(local.begin(), local.end(),
              [](const Monomial& a, const Monomial& b) { return a.exponents() < b.exponents(); });
    local.erase(std::unique(local.begin(), local.end(),
                            [](const Monomial& a, const Monomial& b) {
                              return a.exponents() == b.exponents();
                            }),
                local.end());
    size_t minimal_gens = 0;
    for (size_t i = 0; i < local.size(); ++i) {
      bool minimal = true;
      for (size_t j = 0; j < local.size(); ++j)
        if (j != i && local[j].divides(local[i])) {
          minimal = false;
          break;
        }
      if (minimal) ++minimal_gens;
    }
    if (minimal_gens != P.size()) return false;
  }
  return true;
}

}  // namespace regalia
