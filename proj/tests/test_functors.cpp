#include "doctest.h"

#include "macaulay_oracle.hpp"
#include "regalia/ainvariants.hpp"
#include "regalia/functors.hpp"
#include "regalia/hilbert.hpp"
#include "regalia/parse.hpp"

#include <stdexcept>
#include <vector>

using namespace regalia;

namespace {

RingPtr QQ(int n) { return Ring::polynomial_ring(CoefficientField::rationals(), n); }
RingPtr GF(long long p, int n) {
  return Ring::polynomial_ring(CoefficientField::prime_field(p), n);
}

Ideal ideal_of(const RingPtr& R, const std::string& gens) {
  return Ideal(R, parse_polynomial_list(R, gens));
}

RingPtr quotient_of(const RingPtr& R, const std::string& gens) {
  return Ring::quotient_ring(R, parse_polynomial_list(R, gens));
}

}  // namespace

TEST_CASE("frobenius power of cyclic modules matches bracket powers") {
  auto R = GF(2, 2);
  Ideal I = ideal_of(R, "x0, x1");
  GradedModule M = GradedModule::cyclic(I);
  GradedModule FM = frobenius_power(M, 1);
  GradedModule bracket = GradedModule::cyclic(bracket_power(I, 2));
  for (int d = 0; d <= 6; ++d) CHECK(FM.hf(d) == bracket.hf(d));
  CHECK(ideal_equal(FM.annihilator(), bracket_power(I, 2)));

  // Two independent code paths, equal reduced Groebner bases.
  Ideal direct(R, {parse_polynomial(R, "x0^2"), parse_polynomial(R, "x1^2")});
  CHECK(ideal_equal(bracket_power(I, 2), direct));
}

TEST_CASE("frobenius power scales free twists by p^e") {
  auto R = GF(3, 2);
  GradedModule F = GradedModule::free_module(FreeModule{R, {1, 2}});
  GradedModule FF = frobenius_power(F, 1);
  CHECK(FF.presentation().target().twists == std::vector<int>{3, 6});
  CHECK(FF.presentation().cols() == 0);
  // e = 0 is the identity functor.
  GradedModule F0 = frobenius_power(F, 0);
  CHECK(F0.presentation().target().twists == std::vector<int>{1, 2});
}

TEST_CASE("frobenius power regularity of the Koszul complete intersection") {
  auto R = GF(3, 2);
  GradedModule M = GradedModule::cyclic(ideal_of(R, "x0, x1"));
  GradedModule FM = frobenius_power(M, 1);  // R/(x0^3, x1^3)
  CHECK(regularity(FM, RegRoute::betti) == ExtInt(4));
  CHECK(regularity(FM, RegRoute::duality) == ExtInt(4));
}

TEST_CASE("frobenius power requires prime characteristic") {
  auto R = QQ(2);
  GradedModule M = GradedModule::cyclic(ideal_of(R, "x0"));
  CHECK_THROWS_AS(frobenius_power(M, 1), std::invalid_argument);
  CHECK_THROWS_AS(frobenius_power(M, -1), std::invalid_argument);
}

TEST_CASE("frobenius tor vanishes over a regular ring") {
  auto R = GF(2, 2);
  GradedModule M = GradedModule::cyclic(ideal_of(R, "x0, x1"));
  for (int i = 1; i <= 2; ++i) {
    FrobeniusTor t = frobenius_tor(M, 1, i);
    CHECK(t.value.is_zero());
    CHECK_FALSE(t.truncated);
  }
}

TEST_CASE("frobenius tor over a hypersurface detects non-flatness") {
  auto R = GF(2, 2);
  auto S = quotient_of(R, "x0^2");
  GradedModule M = GradedModule::cyclic(ideal_of(S, "x0"));

  // Oracle: the resolution of M is the periodic ... -> S(-2) -> S(-1) -> S
  // with differential [x0]; Frobenius sends every entry to x0^2 = 0, so
  // Tor_1(M, S^[1]) = S(-2) on the nose.
  FrobeniusTor t = frobenius_tor(M, 1, 1);
  CHECK_FALSE(t.value.is_zero());
  CHECK_FALSE(t.truncated);  // index 1 sits well inside the default cap
  CHECK(t.value.hf(1) == 0);
  CHECK(t.value.hf(2) == 1);
  CHECK(t.value.hf(3) == 2);
  CHECK(t.value.hf(4) == 2);
  CHECK(t.value.dim() == ExtInt(1));

  // e = 0 is plain Tor against S itself: the resolution is exact.
  FrobeniusTor plain = frobenius_tor(M, 0, 1);
  CHECK(plain.value.is_zero());

  // Asking at or past the truncation cap sets the flag (fresh module so the
  // shared resolution cache holds nothing longer).
  GradedModule M2 = GradedModule::cyclic(ideal_of(S, "x0"));
  FrobeniusTor cut = frobenius_tor(M2, 1, 2, 2);
  CHECK(cut.truncated);
}

TEST_CASE("frobenius tor support bound (Lemma on Sing meet Supp)") {
  auto R = GF(2, 2);
  auto S = quotient_of(R, "x0^2");
  GradedModule M = GradedModule::cyclic(ideal_of(S, "x0"));
  FrobeniusTor t = frobenius_tor(M, 1, 1);
  SingLocus sing = sing_locus_dim(S);
  ExtInt supp_dim = M.dim();
  CHECK(t.value.dim() <= sing.dim);
  CHECK(t.value.dim() <= supp_dim);
}

TEST_CASE("power kernel of the maximal ideal in two variables") {
  auto R = QQ(2);
  PowerKernel pk = power_kernel(ideal_of(R, "x0, x1"), 2);
  CHECK(pk.ell == 2);
  // Degree 2: x (x) y - y (x) x spans the kernel of the 4 -> 3 rank count.
  CHECK(pk.T.hf(2) == 1);
  CHECK_FALSE(pk.T.is_zero());
}

TEST_CASE("power kernel is zero for principal ideals") {
  auto R = QQ(2);
  PowerKernel pk = power_kernel(ideal_of(R, "x0^3"), 3);
  CHECK(pk.T.is_zero());
  CHECK_THROWS_AS(power_kernel(ideal_of(R, "x0"), 1), std::invalid_argument);
}

TEST_CASE("power kernel Hilbert data against the slice oracle") {
  auto R = QQ(2);
  Ideal I = ideal_of(R, "x0^2, x0*x1");
  PowerKernel pk = power_kernel(I, 2);
  // Oracle: dim T_d = dim (I (x) I)_d - dim (I^2)_d, where the tensor slice
  // is the free slice modulo the relation columns and the power slice is a
  // plain ideal slice, all by dense linear algebra.
  Ideal I2 = ideal_power(I, 2);
  auto I2gb = submodule_groebner(generator_row(I2));
  for (int d = 0; d <= 8; ++d) {
    long long tensor_dim = oracle::coker_slice_dim(pk.T.den(), d);
    long long power_dim = oracle::free_slice_dim(R, {0}, d) - coker_hf(I2gb, d);
    CHECK(pk.T.hf(d) == tensor_dim - power_dim);
  }
}

TEST_CASE("kahler differentials of Q[x]/(x^2)") {
  auto R = QQ(1);
  auto B = quotient_of(R, "x0^2");
  KahlerModule k = kahler_module(B);
  // d(x^2) = 2x dx with 2 a unit: Omega = (B/(x))( -1 ), so one element dx.
  CHECK(k.omega.hf(0) == 0);
  CHECK(k.omega.hf(1) == 1);
  CHECK(k.omega.hf(2) == 0);
  // K = ann(2x) shifted: the single class x*[x^2] in degree 3.
  CHECK(k.kernel.hf(2) == 0);
  CHECK(k.kernel.hf(3) == 1);
  CHECK(k.kernel.hf(4) == 0);
}

TEST_CASE("kahler differentials of F_2[x]/(x^2) are free") {
  auto R = GF(2, 1);
  auto B = quotient_of(R, "x0^2");
  KahlerModule k = kahler_module(B);
  // The Jacobian vanishes in characteristic 2: Omega = B(-1).
  CHECK(k.omega.hf(1) == 1);
  CHECK(k.omega.hf(2) == 1);
  CHECK(k.omega.hf(3) == 0);
  // K is then all of I/I^2 = B(-2).
  CHECK(k.kernel.hf(2) == 1);
  CHECK(k.kernel.hf(3) == 1);
  CHECK(k.kernel.hf(4) == 0);
}

TEST_CASE("kahler differentials of a polynomial ring are free on dx_i") {
  auto R = QQ(2);
  KahlerModule k = kahler_module(R);
  CHECK(k.omega.hf(1) == 2);
  CHECK(k.omega.hf(2) == 4);  // B(-1)^2 in two variables
  CHECK(k.kernel.is_zero());
}

TEST_CASE("kahler conormal sequence is rank-additive in every degree") {
  auto R = QQ(3);
  auto B = quotient_of(R, "x0^2 + x1^2 + x2^2");
  KahlerModule k = kahler_module(B);
  int n = B->nvars();
  // I/I^2 is the kernel's ambient free module modulo the same relations the
  // kernel's denominator carries.
  Subquotient conormal(GradedMatrix::identity(k.kernel.ambient()), k.kernel.den());
  GradedModule free_part =
      GradedModule::free_module(FreeModule{B, std::vector<int>(n, 1)});
  // HF(I/I^2) - HF(K) = HF(B(-1)^n) - HF(Omega) degree by degree.
  for (int d = 0; d <= 6; ++d)
    CHECK(conormal.hf(d) - k.kernel.hf(d) == free_part.hf(d) - k.omega.hf(d));
}

TEST_CASE("singular locus dimensions") {
  auto R3 = QQ(3);
  auto cone = quotient_of(R3, "x0^2 + x1^2 + x2^2");
  SingLocus s = sing_locus_dim(cone);
  CHECK(s.dim == ExtInt(0));  // just the vertex
  CHECK_FALSE(s.inseparability_caveat);

  CHECK(sing_locus_dim(QQ(2)).dim.is_neg_inf());

  auto doubled = quotient_of(R3, "x0^2");
  CHECK(sing_locus_dim(doubled).dim == ExtInt(2));
}

TEST_CASE("singular locus equidimensionality gate and caveat flag") {
  auto R = QQ(3);
  auto two_gens = quotient_of(R, "x0^2, x1^2");
  CHECK_THROWS_AS(sing_locus_dim(two_gens), std::invalid_argument);
  SingLocus s = sing_locus_dim(two_gens, /*assert_equidimensional=*/true);
  CHECK(s.dim == ExtInt(1));  // the whole line x=y=0 is singular
  CHECK_FALSE(s.inseparability_caveat);

  auto small_p = quotient_of(GF(2, 3), "x0^2 + x1^2 + x2^2");
  SingLocus t = sing_locus_dim(small_p);
  CHECK(t.inseparability_caveat);  // p = 2 <= max generator degree
}

TEST_CASE("monomial minimal primes as minimal hitting sets") {
  auto R = QQ(3);
  auto primes = monomial_minimal_primes(ideal_of(R, "x0^2, x0*x1"));
  REQUIRE(primes.size() == 1);
  CHECK(primes[0] == std::vector<int>{0});

  auto edges = monomial_minimal_primes(ideal_of(R, "x0*x1, x0*x2, x1*x2"));
  REQUIRE(edges.size() == 3);
  CHECK(edges[0] == std::vector<int>{0, 1});
  CHECK(edges[1] == std::vector<int>{0, 2});
  CHECK(edges[2] == std::vector<int>{1, 2});

  CHECK(monomial_minimal_primes(Ideal::zero(R)) ==
        std::vector<std::vector<int>>{{}});
  CHECK(monomial_minimal_primes(Ideal::unit(R)).empty());
  CHECK_THROWS_AS(monomial_minimal_primes(ideal_of(R, "x0 + x1")),
                  std::invalid_argument);
}

TEST_CASE("generic complete intersection detection for monomial ideals") {
  auto R = QQ(3);
  CHECK(monomial_generic_ci(ideal_of(R, "x0^2, x0*x1")));
  CHECK(monomial_generic_ci(ideal_of(R, "x0*x1, x0*x2, x1*x2")));
  CHECK_FALSE(monomial_generic_ci(ideal_of(R, "x0^2, x0*x1, x1^2")));
}
