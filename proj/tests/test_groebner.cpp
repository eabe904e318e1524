#include "doctest.h"

#include "macaulay_oracle.hpp"
#include "regalia/groebner.hpp"
#include "regalia/parse.hpp"

#include <random>
#include <set>
#include <vector>

using namespace regalia;

namespace {

RingPtr QQ2() { return Ring::polynomial_ring(CoefficientField::rationals(), 2); }

std::vector<Polynomial> gb_of(const RingPtr& R, const std::string& gens) {
  return poly_groebner(R, parse_polynomial_list(R, gens));
}

// Count of degree-d monomials divisible by some leading monomial of the basis.
int initial_count(const RingPtr& R, const std::vector<Polynomial>& gb, int d) {
  auto basis = oracle::degree_basis(R, {0}, d);
  int count = 0;
  for (const auto& [m, c] : basis) {
    for (const Polynomial& g : gb)
      if (g.leading_monomial().divides(m)) {
        ++count;
        break;
      }
  }
  return count;
}

GradedMatrix row_matrix(const RingPtr& R, const std::string& gens) {
  auto fs = parse_polynomial_list(R, gens);
  FreeModule target{R, {0}};
  std::vector<int> twists;
  for (const auto& f : fs) twists.push_back(static_cast<int>(f.degree().value()));
  FreeModule source{R, twists};
  std::vector<std::vector<Polynomial>> entries(1, fs);
  return GradedMatrix(target, source, entries);
}

// Random homogeneous polynomial of the given degree.
Polynomial random_form(const RingPtr& R, int degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> cd(-4, 4);
  auto basis = oracle::degree_basis(R, {0}, degree);
  Polynomial f = Polynomial::zero(R);
  for (const auto& [m, c] : basis) {
    long long a = cd(rng);
    if (a != 0) f = f + Polynomial::from_terms(R, {{R->field().from_int(a), m}});
  }
  return f;
}

}  // namespace

TEST_CASE("reduced Groebner bases: pinned ideals") {
  auto R = QQ2();
  auto gb1 = gb_of(R, "x0^2, x0*x1");
  REQUIRE(gb1.size() == 2);
  CHECK(gb1[0] == parse_polynomial(R, "x0*x1"));
  CHECK(gb1[1] == parse_polynomial(R, "x0^2"));

  auto gb2 = gb_of(R, "x0");
  REQUIRE(gb2.size() == 1);
  CHECK(gb2[0] == parse_polynomial(R, "x0"));

  // (x^2+y^2, xy) completes with the S-polynomial y^3.
  auto gb3 = gb_of(R, "x0^2 + x1^2, x0*x1");
  REQUIRE(gb3.size() == 3);
  CHECK(gb3[0] == parse_polynomial(R, "x0*x1"));
  CHECK(gb3[1] == parse_polynomial(R, "x0^2 + x1^2"));
  CHECK(gb3[2] == parse_polynomial(R, "x1^3"));

  CHECK(poly_groebner(R, {}).empty());
  CHECK(poly_groebner(R, {Polynomial::zero(R)}).empty());
}

TEST_CASE("Groebner initial span matches Macaulay row reduction, degree by degree") {
  auto R = QQ2();
  auto R3 = Ring::polynomial_ring(CoefficientField::rationals(), 3);
  struct Case {
    RingPtr ring;
    std::string gens;
  };
  std::vector<Case> cases = {
      {R, "x0^2 + x1^2, x0*x1"},
      {R, "x0^3 - x1^3, x0^2*x1"},
      {R3, "x0^2 - x1*x2, x1^2 - x0*x2"},
      {R3, "x0*x1 + x2^2, x1*x2, x0^2 - x1^2"},
  };
  for (const auto& c : cases) {
    auto gens = parse_polynomial_list(c.ring, c.gens);
    auto gb = poly_groebner(c.ring, gens);
    GradedMatrix A = row_matrix(c.ring, c.gens);
    for (int d = 0; d <= 6; ++d) {
      // dim of the degree-d slice of the ideal, two independent ways.
      int oracle_rank = oracle::submodule_slice_rank(A, d);
      CHECK(initial_count(c.ring, gb, d) == oracle_rank);
    }
    // Membership: every generator and random combinations reduce to zero.
    std::mt19937_64 rng(5);
    for (const auto& g : gens) CHECK(poly_normal_form(g, gb).is_zero());
    for (int t = 0; t < 10; ++t) {
      Polynomial combo = Polynomial::zero(c.ring);
      for (const auto& g : gens)
        combo = combo + g.times_monomial(Monomial::variable(c.ring->nvars(),
                                                            t % c.ring->nvars())
                                             .pow(t % 3));
      CHECK(poly_normal_form(combo, gb).is_zero());
    }
  }
}

TEST_CASE("Buchberger criterion holds for returned bases") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 12; ++trial) {
    int nvars = 2 + static_cast<int>(trial % 2);
    auto R = Ring::polynomial_ring(trial % 3 == 0
                                       ? CoefficientField::prime_field(5)
                                       : CoefficientField::rationals(),
                                   nvars);
    std::vector<Polynomial> gens;
    std::uniform_int_distribution<int> dd(1, 3);
    for (int i = 0; i < 3; ++i) {
      Polynomial f = random_form(R, dd(rng), rng);
      if (!f.is_zero()) gens.push_back(f);
    }
    auto gb = poly_groebner(R, gens);
    for (std::size_t i = 0; i < gb.size(); ++i)
      for (std::size_t j = i + 1; j < gb.size(); ++j) {
        Monomial l = lcm(gb[i].leading_monomial(), gb[j].leading_monomial());
        Polynomial s = gb[i].times_monomial(gb[i].leading_monomial().divide_into(l)) -
                       gb[j].times_monomial(gb[j].leading_monomial().divide_into(l));
        CHECK(poly_normal_form(s, gb).is_zero());
      }
    // Reducedness: no trailing term of any element is divisible by another lm.
    for (std::size_t i = 0; i < gb.size(); ++i) {
      CHECK(gb[i].ring()->field().is_one(gb[i].leading_coeff()));
      for (const Term& t : gb[i].terms())
        for (std::size_t j = 0; j < gb.size(); ++j) {
          if (j == i && t.mono == gb[i].leading_monomial()) continue;
          CHECK(!gb[j].leading_monomial().divides(t.mono));
        }
    }
    // Determinism and generator-order independence.
    auto gb_again = poly_groebner(R, gens);
    CHECK(gb == gb_again);
    std::vector<Polynomial> rev(gens.rbegin(), gens.rend());
    CHECK(poly_groebner(R, rev) == gb);
  }
}

TEST_CASE("normal form: pinned reductions, idempotence, linearity") {
  auto R = QQ2();
  auto gb = gb_of(R, "x0^2, x0*x1");
  CHECK(poly_normal_form(parse_polynomial(R, "x0^2"), gb).is_zero());
  CHECK(poly_normal_form(parse_polynomial(R, "x1^3"), gb_of(R, "x0")) ==
        parse_polynomial(R, "x1^3"));
  CHECK(poly_normal_form(parse_polynomial(R, "(x0+x1)^2"), gb_of(R, "x0*x1")) ==
        parse_polynomial(R, "x0^2 + x1^2"));

  std::mt19937_64 rng(31);
  auto gbr = gb_of(R, "x0^2 + x1^2, x0*x1");
  for (int t = 0; t < 20; ++t) {
    Polynomial f = random_form(R, 1 + t % 4, rng);
    Polynomial g = random_form(R, 1 + t % 4, rng);
    Polynomial nf = poly_normal_form(f, gbr);
    CHECK(poly_normal_form(nf, gbr) == nf);
    CHECK(poly_normal_form(f + g, gbr) == nf + poly_normal_form(g, gbr));
    // No term of a normal form is divisible by a leading monomial.
    for (const Term& term : nf.terms())
      for (const auto& b : gbr) CHECK(!b.leading_monomial().divides(term.mono));
  }
}

TEST_CASE("syzygies: pinned kernels and exactness against the oracle") {
  auto R = QQ2();
  {
    GradedMatrix A = row_matrix(R, "x0, x1");
    GradedMatrix Z = syzygy_matrix(A);
    REQUIRE(Z.cols() == 1);
    CHECK((A * Z).is_zero());
    // Koszul syzygy (x1, -x0) up to sign/scale.
    Polynomial a = Z.entry(0, 0), b = Z.entry(1, 0);
    CHECK(a * parse_polynomial(R, "x0") + b * parse_polynomial(R, "x1") ==
          Polynomial::zero(R));
    CHECK(!a.is_zero());
  }
  {
    GradedMatrix A = row_matrix(R, "x0^2, x0*x1");
    GradedMatrix Z = syzygy_matrix(A);
    REQUIRE(Z.cols() == 1);
    CHECK(Z.entry(0, 0) == parse_polynomial(R, "x1"));
    CHECK(Z.entry(1, 0) == parse_polynomial(R, "0") - parse_polynomial(R, "x0"));
    CHECK((A * Z).is_zero());
  }
  {
    // Injective map: x * (-) : R(-1) -> R has no syzygies.
    GradedMatrix A = row_matrix(R, "x0");
    CHECK(syzygy_matrix(A).cols() == 0);
  }
  // Degreewise rank agreement: span of syz(A) equals the kernel slice.
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 6; ++trial) {
    auto R3 = Ring::polynomial_ring(CoefficientField::rationals(), 3);
    std::vector<Polynomial> fs = {random_form(R3, 2, rng), random_form(R3, 2, rng),
                                  random_form(R3, 3, rng)};
    std::vector<int> twists;
    std::vector<Polynomial> row;
    for (auto& f : fs)
      if (!f.is_zero()) {
        twists.push_back(static_cast<int>(f.degree().value()));
        row.push_back(f);
      }
    if (row.empty()) continue;
    GradedMatrix A(FreeModule{R3, {0}}, FreeModule{R3, twists}, {row});
    GradedMatrix Z = syzygy_matrix(A);
    CHECK((A * Z).is_zero());
    for (int d = 0; d <= 7; ++d) {
      long long src = oracle::free_slice_dim(R3, twists, d);
      int im_rank = oracle::map_slice_rank(A, d);
      int ker_dim = static_cast<int>(src) - im_rank;
      CHECK(oracle::submodule_slice_rank(Z, d) == ker_dim);
    }
  }
}

TEST_CASE("module Groebner bases over quotient rings") {
  auto R = QQ2();
  auto S = Ring::quotient_ring(R, parse_polynomial_list(R, "x0^2"));
  // In S = Q[x,y]/(x^2), the ideal (x0) contains x0*x1 but not x1.
  GradedMatrix A = row_matrix(S, "x0");
  SubmoduleGB G = submodule_groebner(A);
  CHECK(submodule_contains(G, {parse_polynomial(S, "x0*x1")}));
  CHECK(submodule_contains(G, {parse_polynomial(S, "x0^2")}));  // zero in S
  CHECK(!submodule_contains(G, {parse_polynomial(S, "x1")}));
  // Kernel of x0 : S(-1) -> S is generated by x0 (since x0^2 = 0).
  GradedMatrix Z = syzygy_matrix(A);
  REQUIRE(Z.cols() == 1);
  CHECK(Z.entry(0, 0) == parse_polynomial(S, "x0"));

  // Rank-2 module over the polynomial ring: kernel of [x0 x1] as map to R^1
  // computed above; now a 2x2 with a known kernel.
  Polynomial x = Polynomial::variable(R, 0), y = Polynomial::variable(R, 1);
  GradedMatrix B(FreeModule{R, {0, 0}}, FreeModule{R, {1, 1}},
                 {{x, y}, {Polynomial::zero(R), Polynomial::zero(R)}});
  GradedMatrix ZB = syzygy_matrix(B);
  REQUIRE(ZB.cols() == 1);
  CHECK((B * ZB).is_zero());
}

TEST_CASE("preimage generators") {
  auto R = QQ2();
  Polynomial x = Polynomial::variable(R, 0), y = Polynomial::variable(R, 1);
  // A = [x0^2  x0*x1], B = [x0^3]: preimage of im(B) under A.
  GradedMatrix A = row_matrix(R, "x0^2, x0*x1");
  GradedMatrix B = row_matrix(R, "x0^3");
  GradedMatrix P = preimage_matrix(A, B);
  CHECK(P.cols() > 0);
  SubmoduleGB BG = submodule_groebner(B);
  for (int c = 0; c < P.cols(); ++c) {
    auto img = (A * P).column(c);
    CHECK(submodule_contains(BG, img));
  }
  // The syzygy (x1, -x0) must appear in the preimage of the zero module too.
  SubmoduleGB PG = submodule_groebner(P);
  std::vector<Polynomial> syz = {y, Polynomial::zero(R) - x};
  CHECK(submodule_contains(PG, syz));
}
