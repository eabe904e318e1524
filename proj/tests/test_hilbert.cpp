#include "doctest.h"

#include "macaulay_oracle.hpp"
#include "regalia/hilbert.hpp"
#include "regalia/ideal.hpp"
#include "regalia/parse.hpp"

#include <random>
#include <vector>

using namespace regalia;

namespace {

RingPtr QQ(int n) { return Ring::polynomial_ring(CoefficientField::rationals(), n); }

Ideal ideal_of(const RingPtr& R, const std::string& gens) {
  return Ideal(R, parse_polynomial_list(R, gens));
}

}  // namespace

TEST_CASE("hilbert numerators of monomial ideals") {
  // R itself: numerator 1.
  CHECK(hilbert_numerator(2, {}) == std::vector<long long>{1});
  // Unit ideal: zero numerator.
  CHECK(hilbert_numerator(2, {Monomial::one(2)}).empty());
  // Complete intersection of pure powers: product formula.
  CHECK(hilbert_numerator(2, {Monomial({2, 0}), Monomial({0, 3})}) ==
        std::vector<long long>({1, 0, -1, -1, 0, 1}));
  // (x^2, xy): 1 - 2t^2 + t^3.
  CHECK(hilbert_numerator(2, {Monomial({2, 0}), Monomial({1, 1})}) ==
        std::vector<long long>({1, 0, -2, 1}));
  // Redundant generators are minimalized away.
  CHECK(hilbert_numerator(2, {Monomial({1, 0}), Monomial({2, 1})}) ==
        std::vector<long long>({1, -1}));
}

TEST_CASE("hilbert data of pinned modules") {
  auto R = QQ(2);
  // R = Q[x,y]: dim 2, HF(t) = t + 1.
  HilbertData hr = hilbert_data(Ideal::zero(R), 0, 6);
  CHECK(hr.dim == ExtInt(2));
  CHECK(hr.indeg == ExtInt(0));
  for (int d = 0; d <= 6; ++d) CHECK(hr.value(d) == d + 1);

  // Q[x,y]/(x^2, xy): dim 1, HF = 1, 2, 1, 1, 1, ...
  HilbertData hq = hilbert_data(ideal_of(R, "x0^2, x0*x1"), 0, 8);
  CHECK(hq.dim == ExtInt(1));
  CHECK(hq.indeg == ExtInt(0));
  CHECK(hq.value(0) == 1);
  CHECK(hq.value(1) == 2);
  for (int d = 2; d <= 8; ++d) CHECK(hq.value(d) == 1);

  // Zero module: dim -inf, indeg +inf.
  HilbertData hz = hilbert_data(Ideal::unit(R), 0, 3);
  CHECK(hz.dim == ExtInt::neg_inf());
  CHECK(hz.indeg == ExtInt::pos_inf());
  for (int d = 0; d <= 3; ++d) CHECK(hz.value(d) == 0);

  // Finite-length module: dim 0.
  HilbertData hf = hilbert_data(ideal_of(R, "x0^2, x1^2"), 0, 4);
  CHECK(hf.dim == ExtInt(0));
  CHECK(hf.value(0) == 1);
  CHECK(hf.value(1) == 2);
  CHECK(hf.value(2) == 1);
  CHECK(hf.value(3) == 0);

  // Hypersurface: dim 2 in three variables.
  auto R3 = QQ(3);
  CHECK(krull_dim(ideal_of(R3, "x0^2 - x1*x2")) == ExtInt(2));
  CHECK(codim(ideal_of(R3, "x0^2 - x1*x2")) == ExtInt(1));
  CHECK(codim(Ideal::unit(R3)) == ExtInt::pos_inf());
  CHECK(krull_dim(ideal_of(R3, "x0, x1, x2")) == ExtInt(0));
}

TEST_CASE("hilbert function against the Macaulay oracle") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> nd(2, 3), dd(1, 3), cd(-3, 3);
  for (int trial = 0; trial < 15; ++trial) {
    int n = nd(rng);
    auto R = QQ(n);
    std::vector<Polynomial> gens;
    for (int i = 0; i < 3; ++i) {
      int deg = dd(rng);
      auto basis = oracle::degree_basis(R, {0}, deg);
      Polynomial f = Polynomial::zero(R);
      for (const auto& [m, c] : basis) {
        int a = cd(rng);
        if (a != 0) f = f + Polynomial::from_terms(R, {{R->field().from_int(a), m}});
      }
      if (!f.is_zero()) gens.push_back(f);
    }
    Ideal I(R, gens);
    HilbertData hd = hilbert_data(I, 0, 6);
    GradedMatrix row = generator_row(I);
    for (int d = 0; d <= 6; ++d) CHECK(hd.value(d) == oracle::coker_slice_dim(row, d));
  }
}

TEST_CASE("hilbert data over quotient rings") {
  auto R = QQ(2);
  auto S = Ring::quotient_ring(R, parse_polynomial_list(R, "x0^2"));
  // S = Q[x,y]/(x^2): HF = 1, 2, 2, 2, ...; dim 1.
  HilbertData hs = hilbert_data(Ideal::zero(S), 0, 5);
  CHECK(hs.dim == ExtInt(1));
  CHECK(hs.value(0) == 1);
  for (int d = 1; d <= 5; ++d) CHECK(hs.value(d) == 2);
  // S/(x) = Q[y]: HF all 1, dim 1.
  HilbertData hx = hilbert_data(Ideal(S, parse_polynomial_list(S, "x0")), 0, 4);
  CHECK(hx.dim == ExtInt(1));
  for (int d = 0; d <= 4; ++d) CHECK(hx.value(d) == 1);
  // dim S = 1, so codim of (x) in S is 0 (it is nilpotent-supported).
  CHECK(krull_dim(Ideal(S, parse_polynomial_list(S, "x0"))) == ExtInt(1));
  // The irrelevant ideal of S has dim 0 quotient.
  CHECK(krull_dim(Ideal::irrelevant(S)) == ExtInt(0));
}

TEST_CASE("hilbert data of a matrix cokernel with twists") {
  auto R = QQ(2);
  Polynomial x = Polynomial::variable(R, 0), y = Polynomial::variable(R, 1);
  // coker of R(-1)^2 --[x y]--> R: the residue field k in degree 0.
  GradedMatrix A(FreeModule{R, {0}}, FreeModule{R, {1, 1}}, {{x, y}});
  HilbertData h = hilbert_data(A, 0, 3);
  CHECK(h.dim == ExtInt(0));
  CHECK(h.indeg == ExtInt(0));
  CHECK(h.value(0) == 1);
  CHECK(h.value(1) == 0);
  // Twisted free module R(-2) (+) R(-5), no relations: indeg 2.
  GradedMatrix Z(FreeModule{R, {2, 5}}, FreeModule{R, {}});
  HilbertData hz = hilbert_data(Z, 0, 6);
  CHECK(hz.dim == ExtInt(2));
  CHECK(hz.indeg == ExtInt(2));
  CHECK(hz.value(1) == 0);
  CHECK(hz.value(2) == 1);
  CHECK(hz.value(5) == 5);  // 4 from R(-2), 1 from R(-5)
  // Rank-0 target: the zero module.
  GradedMatrix N(FreeModule{R, {}}, FreeModule{R, {}});
  HilbertData hn = hilbert_data(N, 0, 2);
  CHECK(hn.dim == ExtInt::neg_inf());
  CHECK(hn.indeg == ExtInt::pos_inf());
}
