#include "regalia/hilbert.hpp"

#include <algorithm>
#include <stdexcept>

namespace regalia {

namespace {

// Dense polynomial helpers on int64 coefficient vectors (index = degree);
// the empty vector is the zero polynomial.
std::vector<long long> poly_add(const std::vector<long long>& a,
                                const std::vector<long long>& b) {
  std::vector<long long> r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<long long> poly_shift(const std::vector<long long>& a, int k) {
  if (a.empty()) return a;
  std::vector<long long> r(a.size() + static_cast<std::size_t>(k), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
  return r;
}

std::vector<long long> poly_mul(const std::vector<long long>& a,
                                const std::vector<long long>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<long long> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// Keep only the minimal generators (none divides another), deduplicated.
std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
  std::stable_sort(gens.begin(), gens.end(),
                   [](const Monomial& a, const Monomial& b) { return a < b; });
  std::vector<Monomial> kept;
  for (const auto& m : gens) {
    bool dominated = false;
    for (const auto& k : kept)
      if (k.divides(m)) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(m);
  }
  return kept;
}

bool is_pure_power(const Monomial& m) {
  int nonzero = 0;
  for (int v = 0; v < m.nvars(); ++v)
    if (m.exponent(v) > 0) ++nonzero;
  return nonzero == 1;
}

// Binomial coefficient C(a, b) for small arguments.
long long binom(long long a, int b) {
  if (a < 0 || b < 0 || a < b) return 0;
  long long r = 1;
  for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

// Multiplicity of the factor (1 - t) in the numerator; numerator must be
// nonzero.
int one_minus_t_multiplicity(std::vector<long long> n) {
  int mult = 0;
  while (!n.empty()) {
    long long at_one = 0;
    for (long long c : n) at_one += c;
    if (at_one != 0) break;
    // Exact division by (1 - t): q_i = n_i + q_{i-1}.
    std::vector<long long> q;
    long long carry = 0;
    for (std::size_t i = 0; i + 1 < n.size(); ++i) {
      carry += n[i];
      q.push_back(carry);
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    n = std::move(q);
    ++mult;
  }
  return mult;
}

// Hilbert-function value of R/(monomial ideal with numerator n) in degree d.
long long numerator_hf(const std::vector<long long>& n, int nvars, int d) {
  long long hf = 0;
  for (std::size_t j = 0; j < n.size(); ++j)
    hf += n[j] * binom(d - static_cast<long long>(j) + nvars - 1, nvars - 1);
  return hf;
}

// Leading monomials of the submodule GB, bucketed by component.
std::vector<std::vector<Monomial>> initial_modules(const SubmoduleGB& G) {
  std::vector<std::vector<Monomial>> in(G.twists.size());
  for (const ModVec& g : G.gb) {
    if (g.empty()) continue;
    const ModTerm& lt = g.front();
    in.at(lt.comp).push_back(lt.mono);
  }
  return in;
}

}  // namespace

long long HilbertData::value(int d) const {
  if (d < lo || d > hi) throw std::out_of_range("HilbertData::value: degree outside window");
  return values[static_cast<std::size_t>(d - lo)];
}

std::vector<long long> hilbert_numerator(int nvars, std::vector<Monomial> gens) {
  gens = minimalize_monomials(std::move(gens));
  for (const auto& m : gens)
    if (m.is_one()) return {};  // unit ideal: zero numerator
  if (gens.empty()) return {1};

  bool all_pure = std::all_of(gens.begin(), gens.end(), is_pure_power);
  if (all_pure) {
    std::vector<long long> r = {1};
    for (const auto& m : gens) {
      std::vector<long long> factor(static_cast<std::size_t>(m.degree()) + 1, 0);
      factor[0] = 1;
      factor[static_cast<std::size_t>(m.degree())] = -1;
      r = poly_mul(r, factor);
    }
    return r;
  }

  // Pivot: the variable occurring most often among non-pure-power generators.
  int nv = gens.front().nvars();
  std::vector<int> freq(nv, 0);
  for (const auto& m : gens)
    if (!is_pure_power(m))
      for (int v = 0; v < nv; ++v)
        if (m.exponent(v) > 0) ++freq[v];
  int pivot = static_cast<int>(std::max_element(freq.begin(), freq.end()) - freq.begin());

  // I + (x_pivot): generators not involving the pivot, plus the pivot.
  std::vector<Monomial> plus = {Monomial::variable(nv, pivot)};
  for (const auto& m : gens)
    if (m.exponent(pivot) == 0) plus.push_back(m);
  // (I : x_pivot): divide each generator by gcd with the pivot.
  std::vector<Monomial> colon;
  for (const auto& m : gens) {
    std::vector<int> e = m.exponents();
    if (e[pivot] > 0) --e[pivot];
    colon.emplace_back(std::move(e));
  }
  return poly_add(hilbert_numerator(nvars, std::move(plus)),
                  poly_shift(hilbert_numerator(nvars, std::move(colon)), 1));
}

long long coker_hf(const SubmoduleGB& G, int degree) {
  int nvars = G.ambient->nvars();
  long long hf = 0;
  auto in = initial_modules(G);
  for (std::size_t k = 0; k < in.size(); ++k) {
    auto n = hilbert_numerator(nvars, in[k]);
    hf += numerator_hf(n, nvars, degree - G.twists[k]);
  }
  return hf;
}

ExtInt coker_dim(const SubmoduleGB& G) {
  int nvars = G.ambient->nvars();
  ExtInt dim = ExtInt::neg_inf();
  auto in = initial_modules(G);
  for (std::size_t k = 0; k < in.size(); ++k) {
    auto n = hilbert_numerator(nvars, in[k]);
    if (n.empty()) continue;  // this component vanishes
    dim = max(dim, ExtInt(nvars - one_minus_t_multiplicity(n)));
  }
  return dim;
}

ExtInt coker_indeg(const SubmoduleGB& G) {
  int nvars = G.ambient->nvars();
  ExtInt indeg = ExtInt::pos_inf();
  auto in = initial_modules(G);
  for (std::size_t k = 0; k < in.size(); ++k) {
    auto n = hilbert_numerator(nvars, in[k]);
    if (n.empty()) continue;
    indeg = min(indeg, ExtInt(G.twists[k]));
  }
  return indeg;
}

HilbertData hilbert_data(const GradedMatrix& A, int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("hilbert_data: empty window");
  SubmoduleGB G = submodule_groebner(A);
  HilbertData data;
  data.lo = lo;
  data.hi = hi;
  for (int d = lo; d <= hi; ++d) data.values.push_back(coker_hf(G, d));
  data.dim = coker_dim(G);
  data.indeg = coker_indeg(G);
  return data;
}

HilbertData hilbert_data(const Ideal& I, int lo, int hi) {
  return hilbert_data(generator_row(I), lo, hi);
}

ExtInt krull_dim(const Ideal& I) {
  return coker_dim(submodule_groebner(generator_row(I)));
}

ExtInt codim(const Ideal& I) {
  ExtInt ring_dim = krull_dim(Ideal::zero(I.ring()));
  ExtInt quot_dim = krull_dim(I);
  if (quot_dim.is_neg_inf()) return ExtInt::pos_inf();
  return ExtInt(ring_dim.value() - quot_dim.value());
}

}  // namespace regalia
