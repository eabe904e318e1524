#include "doctest.h"

#include "regalia/checks.hpp"
#include "regalia/complexes.hpp"
#include "regalia/graded_module.hpp"
#include "regalia/ideal.hpp"
#include "regalia/parse.hpp"
#include "regalia/reports.hpp"

#include <stdexcept>
#include <string>
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

GradedModule cyclic_of(const RingPtr& R, const std::string& gens) {
  return GradedModule::cyclic(ideal_of(R, gens));
}

RingPtr quotient_of(const RingPtr& R, const std::string& gens) {
  return Ring::quotient_ring(R, parse_polynomial_list(R, gens));
}

GradedModule free_one(const RingPtr& R) {
  return GradedModule::free_module(FreeModule{R, {0}});
}

const Relation* find_rel(const TheoremReport& r, const std::string& name) {
  for (const auto& rel : r.relations)
    if (rel.name == name) return &rel;
  return nullptr;
}

bool all_satisfied(const TheoremReport& r) {
  for (const auto& rel : r.relations)
    if (!rel.satisfied) return false;
  return true;
}

const Hypothesis* find_hyp(const TheoremReport& r, const std::string& name) {
  for (const auto& h : r.hypotheses)
    if (h.name == name) return &h;
  return nullptr;
}

}  // namespace

// ---------------------------------------------------------------------------
// report plumbing (verdict policy, json determinism)
// ---------------------------------------------------------------------------

TEST_CASE("report verdict policy") {
  TheoremReport ok;
  ok.theorem = "t";
  ok.add_hypothesis("h", HypStatus::verified);
  ok.add_relation("r", ExtInt(1), "<=", ExtInt(2));
  ok.finalize(false);
  CHECK(ok.verdict == Verdict::holds);
  CHECK(!ok.counterexample_candidate);
  CHECK(ok.all_hypotheses_verified());

  TheoremReport capped = ok;
  capped.finalize(true);  // satisfied but data was cut
  CHECK(capped.verdict == Verdict::truncated);

  TheoremReport bad;
  bad.add_hypothesis("h", HypStatus::verified);
  bad.add_relation("r", ExtInt(3), "<=", ExtInt(2));
  bad.finalize(false);
  CHECK(bad.verdict == Verdict::violated);

  TheoremReport suspicious;
  suspicious.add_hypothesis("h", HypStatus::asserted);
  suspicious.add_relation("r", ExtInt(3), "<=", ExtInt(2));
  suspicious.finalize(false);
  CHECK(suspicious.verdict == Verdict::vacuous);
  CHECK(suspicious.counterexample_candidate);

  TheoremReport gated;
  gated.add_hypothesis("h", HypStatus::failed);
  gated.add_relation("r", ExtInt(1), "<=", ExtInt(2));
  gated.finalize(false);
  CHECK(gated.verdict == Verdict::vacuous);
  CHECK(!gated.counterexample_candidate);

  TheoremReport cut;
  cut.add_relation("r", ExtInt(3), "<=", ExtInt(2));
  cut.finalize(true);  // the failure may be an artifact of the cap
  CHECK(cut.verdict == Verdict::truncated);

  // Extended values compare the way the relations need them to.
  CHECK(make_relation("r", ExtInt::neg_inf(), "<=", ExtInt::neg_inf()).satisfied);
  CHECK(make_relation("r", ExtInt::neg_inf(), "=", ExtInt::neg_inf()).satisfied);
  CHECK(!make_relation("r", ExtInt(0), "=", ExtInt::neg_inf()).satisfied);
  CHECK(make_relation("r", ExtInt(2), ">=", ExtInt(2)).satisfied);
}

TEST_CASE("report json is byte-deterministic across repeated runs") {
  auto run = [] {
    auto R = QQ(2);
    return check_regfpd(cyclic_of(R, "x0^2, x0*x1"));
  };
  std::string a = report_json(run());
  std::string b = report_json(run());
  CHECK(a == b);
  CHECK(a.front() == '{');
  CHECK(a.find("regfpd") != std::string::npos);

  auto run2 = [] {
    auto R = QQ(2);
    return check_power_bound_cd1(ideal_of(R, "x0^2, x0*x1"), 2);
  };
  CHECK(report_json(run2()) == report_json(run2()));
  CHECK(report_summary(run2()) == report_summary(run2()));
}

// ---------------------------------------------------------------------------
// regfpd
// ---------------------------------------------------------------------------

TEST_CASE("regfpd over a polynomial ring: both routes agree") {
  auto R = QQ(2);
  TheoremReport rep = check_regfpd(cyclic_of(R, "x0^2, x0*x1"));
  CHECK(rep.verdict == Verdict::holds);
  REQUIRE(rep.relations.size() == 1);
  CHECK(rep.relations[0].lhs == ExtInt(1));
  CHECK(rep.relations[0].rhs == ExtInt(1));
  CHECK(rep.relations[0].satisfied);
  CHECK(rep.all_hypotheses_verified());
}

TEST_CASE("regfpd over a quotient ring with finite projective dimension") {
  auto R = QQ(2);
  auto S = quotient_of(R, "x0*x1");
  // x0+x1 is a nonzerodivisor on S, so S/(x0+x1) has pdim 1 over S.
  GradedModule M = GradedModule::cyclic(Ideal(S, parse_polynomial_list(S, "x0 + x1")));
  TheoremReport rep = check_regfpd(M);
  CHECK(rep.verdict == Verdict::holds);
  REQUIRE(rep.relations.size() == 1);
  // reg(M) = 1 (M restricts to Q[x,y]/(xy, x+y), Hilbert function {1,1});
  // reg_S(M) + reg(S) = 0 + 1.
  CHECK(rep.relations[0].lhs == ExtInt(1));
  CHECK(rep.relations[0].rhs == ExtInt(1));
}

TEST_CASE("regfpd gate: infinite projective dimension is a failed hypothesis") {
  auto R = QQ(2);
  auto S = quotient_of(R, "x0*x1");
  // S/(x0) has the periodic resolution ... -> S(-2) -> S(-1) -> S.
  GradedModule M = GradedModule::cyclic(Ideal(S, parse_polynomial_list(S, "x0")));
  TheoremReport rep = check_regfpd(M);
  CHECK(rep.verdict == Verdict::vacuous);
  CHECK(rep.relations.empty());
  CHECK(!rep.all_hypotheses_verified());
}

// ---------------------------------------------------------------------------
// regtor
// ---------------------------------------------------------------------------

TEST_CASE("regtor on a transverse pair over the polynomial ring") {
  auto R = QQ(2);
  std::vector<GradedModule> mods{cyclic_of(R, "x0^2"), cyclic_of(R, "x1^3")};
  TheoremReport rep = check_regtor(mods);
  CHECK(rep.verdict == Verdict::holds);
  const Relation* r =
      find_rel(rep, "max_i{reg(Tor_i) - i} = sum_j reg(M_j) - (s-1) reg(S)");
  REQUIRE(r != nullptr);
  // Tor_0 = R/(x0^2, x1^3) has regularity 3 = 1 + 2; Tor_1 = 0.
  CHECK(r->lhs == ExtInt(3));
  CHECK(r->rhs == ExtInt(3));
}

TEST_CASE("regtor with a repeated factor: Tor_1 contributes") {
  auto R = QQ(2);
  std::vector<GradedModule> mods{cyclic_of(R, "x0"), cyclic_of(R, "x0")};
  TheoremReport rep = check_regtor(mods);
  CHECK(rep.verdict == Verdict::holds);
  // Tor_0 = R/(x0), Tor_1 = (R/(x0))(-1): max{0 - 0, 1 - 1} = 0 = 0 + 0.
  CHECK(rep.relations.back().lhs == ExtInt(0));
  CHECK(rep.relations.back().rhs == ExtInt(0));
}

TEST_CASE("regtor with a zero factor short-circuits") {
  auto R = QQ(2);
  std::vector<GradedModule> mods{GradedModule::zero_module(R), cyclic_of(R, "x0")};
  TheoremReport rep = check_regtor(mods);
  CHECK(rep.verdict == Verdict::holds);
  CHECK(rep.relations.back().lhs == ExtInt::neg_inf());
  CHECK(rep.relations.back().rhs == ExtInt::neg_inf());
}

TEST_CASE("regtor over a quotient ring, one infinite factor tensored last") {
  auto R = QQ(2);
  auto S = quotient_of(R, "x0^2");
  GradedModule k = GradedModule::cyclic(Ideal(S, parse_polynomial_list(S, "x0, x1")));
  GradedModule M = GradedModule::cyclic(Ideal(S, parse_polynomial_list(S, "x1")));
  TheoremReport rep = check_regtor({k, M});
  CHECK(rep.verdict == Verdict::holds);
  // Tor_0 = k, Tor_1 = k(-1); reg(k) + reg(M) - reg(S) = 0 + 1 - 1 = 0.
  CHECK(rep.relations.back().lhs == ExtInt(0));
  CHECK(rep.relations.back().rhs == ExtInt(0));
}

TEST_CASE("regtor gate: two infinite factors over a quotient ring") {
  auto R = QQ(2);
  auto S = quotient_of(R, "x0^2");
  GradedModule k = GradedModule::cyclic(Ideal(S, parse_polynomial_list(S, "x0, x1")));
  TheoremReport rep = check_regtor({k, k});
  CHECK(rep.verdict == Verdict::vacuous);
  CHECK(!rep.all_hypotheses_verified());
}

TEST_CASE("regtor input validation") {
  auto R = QQ(2);
  CHECK_THROWS_AS(check_regtor({cyclic_of(R, "x0")}), std::invalid_argument);
  auto R3 = QQ(3);
  CHECK_THROWS_AS(check_regtor({cyclic_of(R, "x0"), cyclic_of(R3, "x0")}),
                  std::invalid_argument);
}

// ---------------------------------------------------------------------------
// rigidity
// ---------------------------------------------------------------------------

TEST_CASE("rigidity on a regular pair: all three equivalent conditions hold") {
  auto R = QQ(2);
  TheoremReport rep =
      check_rigidity_and_proper({cyclic_of(R, "x0"), cyclic_of(R, "x1")});
  CHECK(rep.verdict == Verdict::holds);
  CHECK(all_satisfied(rep));
  REQUIRE(rep.relations.size() == 6);
  const Relation* tfae = find_rel(
      rep,
      "equivalence: [Tor_1 = 0 and tensor CM] <=> [codim = sum pdim] <=> "
      "[proper and all CM]");
  REQUIRE(tfae != nullptr);
  CHECK(tfae->lhs == ExtInt(7));  // all three conditions true
  CHECK(tfae->rhs == ExtInt(7));
  const Relation* eps = find_rel(rep, "0 <= epsilon");
  REQUIRE(eps != nullptr);
  CHECK(eps->rhs == ExtInt(0));  // transverse: epsilon = 0
}

TEST_CASE("rigidity with a repeated factor: epsilon = epsilon_0 = 1") {
  auto R = QQ(2);
  TheoremReport rep =
      check_rigidity_and_proper({cyclic_of(R, "x0"), cyclic_of(R, "x0")});
  CHECK(rep.verdict == Verdict::holds);
  CHECK(all_satisfied(rep));
  const Relation* eps = find_rel(rep, "0 <= epsilon");
  REQUIRE(eps != nullptr);
  CHECK(eps->rhs == ExtInt(1));
  const Relation* attained =
      find_rel(rep, "epsilon = epsilon_0 (epsilon_0 attained at depth Tor_j)");
  REQUIRE(attained != nullptr);
  CHECK(attained->lhs == ExtInt(1));
  CHECK(attained->rhs == ExtInt(1));
  const Relation* tfae = find_rel(
      rep,
      "equivalence: [Tor_1 = 0 and tensor CM] <=> [codim = sum pdim] <=> "
      "[proper and all CM]");
  REQUIRE(tfae != nullptr);
  CHECK(tfae->lhs == ExtInt(0));  // none of the three conditions hold
}

TEST_CASE("rigidity gate: quotient base ring is a failed hypothesis") {
  auto R = QQ(2);
  auto S = quotient_of(R, "x0^2");
  GradedModule M = GradedModule::cyclic(Ideal(S, parse_polynomial_list(S, "x1")));
  TheoremReport rep = check_rigidity_and_proper({M, M});
  CHECK(rep.verdict == Verdict::vacuous);
}

// ---------------------------------------------------------------------------
// frobenius
// ---------------------------------------------------------------------------

TEST_CASE("frobenius bounds on a line inside the broken quadric") {
  auto R = GF(3, 2);
  auto S = quotient_of(R, "x0*x1");
  GradedModule M = GradedModule::cyclic(Ideal(S, parse_polynomial_list(S, "x0")));
  TheoremReport rep = check_frobenius_bound(M, 2);
  CHECK(rep.verdict == Verdict::holds);
  CHECK(all_satisfied(rep));
  CHECK(rep.all_hypotheses_verified());
  REQUIRE(rep.relations.size() == 10);  // 5 per Frobenius step

  // e = 1: reg(F^1 M) = 2 (socle x0, x0^2 on top of k[x1]).
  const Relation* sharp1 = find_rel(
      rep, "reg(F^e M) <= max_{i<=j<=dim S}{q b_i(M) + a_j(S) + j - i}, e=1");
  REQUIRE(sharp1 != nullptr);
  CHECK(sharp1->lhs == ExtInt(2));
  CHECK(sharp1->rhs == ExtInt(3));
  const Relation* a1 =
      find_rel(rep, "a_1(F^e M) <= max_i{a_{i+l}(S) + q b_i(M)}, e=1");
  REQUIRE(a1 != nullptr);
  // F^1 M = S/(x0^3); its torsion-free quotient is k[x1], so a_1 = -1.
  CHECK(a1->lhs == ExtInt(-1));
  CHECK(a1->rhs == ExtInt(0));  // bound: a_1(S) + q b_0(M) = 0 + 0

  // e = 2: reg(F^2 M) = 8 against the sharp bound 9.
  const Relation* sharp2 = find_rel(
      rep, "reg(F^e M) <= max_{i<=j<=dim S}{q b_i(M) + a_j(S) + j - i}, e=2");
  REQUIRE(sharp2 != nullptr);
  CHECK(sharp2->lhs == ExtInt(8));
  CHECK(sharp2->rhs == ExtInt(9));
}

TEST_CASE("frobenius gate: singular locus too large") {
  auto R = GF(2, 3);
  auto S = quotient_of(R, "x0^2");
  TheoremReport rep = check_frobenius_bound(free_one(S), 1);
  CHECK(rep.verdict == Verdict::vacuous);
  // In characteristic 2 the Jacobian of x0^2 vanishes identically, so the
  // computed singular locus V(x0^2) has cone dimension 2, with the
  // low-characteristic caveat recorded alongside.
  const Hypothesis* h = find_hyp(rep, "dim(Sing(S) cap Supp(M)) <= 1");
  REQUIRE(h != nullptr);
  CHECK(h->status == HypStatus::failed);
  const Hypothesis* cav =
      find_hyp(rep, "Jacobian criterion reliable in this characteristic");
  REQUIRE(cav != nullptr);
  CHECK(cav->status == HypStatus::asserted);
}

TEST_CASE("frobenius input validation") {
  auto R = QQ(2);
  CHECK_THROWS_AS(check_frobenius_bound(free_one(R), 1), std::invalid_argument);
  auto Rp = GF(3, 2);
  CHECK_THROWS_AS(check_frobenius_bound(free_one(Rp), 0), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// power1
// ---------------------------------------------------------------------------

TEST_CASE("power1 bounds are sharp for x0(x0, x1) in two variables") {
  auto R = QQ(2);
  Ideal I = ideal_of(R, "x0^2, x0*x1");
  TheoremReport rep = check_power_bound_cd1(I, 3);
  CHECK(rep.verdict == Verdict::holds);
  CHECK(all_satisfied(rep));
  CHECK(rep.all_hypotheses_verified());
  REQUIRE(rep.relations.size() == 12);  // three bounds for m = 0..3

  // a_0(S/I^{m+1}) = 2m+1 meets the bound exactly for every m.
  for (int m = 0; m <= 3; ++m) {
    std::string sfx = ", m=" + std::to_string(m);
    const Relation* r0 = find_rel(
        rep,
        "a_0(S/I^{m+1}) <= max{a_0(S/I)+b_0(I), a_1(S/I)+b_1(I)} + (m-1) "
        "b_0(I)" +
            sfx);
    REQUIRE(r0 != nullptr);
    CHECK(r0->lhs == ExtInt(2 * m + 1));
    CHECK(r0->rhs == ExtInt(2 * m + 1));
    const Relation* rr = find_rel(
        rep,
        "reg(S/I^{m+1}) <= max{a_0(S/I)+b_0(I), a_1(S/I)+1+reg_1(I)} + (m-1) "
        "b_0(I)" +
            sfx);
    REQUIRE(rr != nullptr);
    CHECK(rr->lhs == ExtInt(2 * m + 1));
    CHECK(rr->rhs == ExtInt(2 * m + 1));
  }
}

TEST_CASE("power1 gate: cohomological dimension 2") {
  auto R = QQ(3);
  TheoremReport rep = check_power_bound_cd1(ideal_of(R, "x0"), 2);
  CHECK(rep.verdict == Verdict::vacuous);
  const Hypothesis* h = find_hyp(rep, "cd(S/I) <= 1");
  REQUIRE(h != nullptr);
  CHECK(h->status == HypStatus::failed);
}

TEST_CASE("power1 input validation") {
  auto R = QQ(2);
  CHECK_THROWS_AS(check_power_bound_cd1(Ideal::zero(R), 1), std::invalid_argument);
  CHECK_THROWS_AS(check_power_bound_cd1(Ideal::unit(R), 1), std::invalid_argument);
  CHECK_THROWS_AS(check_power_bound_cd1(ideal_of(R, "x0"), -1),
                  std::invalid_argument);
}

// ---------------------------------------------------------------------------
// power2
// ---------------------------------------------------------------------------

TEST_CASE("power2 gate: dim R/I must be exactly 2") {
  auto R = QQ(4);
  TheoremReport rep = check_power_bound_dim2(ideal_of(R, "x0^2, x0*x1"), 2);
  CHECK(rep.verdict == Verdict::vacuous);
  const Hypothesis* h = find_hyp(rep, "dim(R/I) = 2");
  REQUIRE(h != nullptr);
  CHECK(h->status == HypStatus::failed);
}

TEST_CASE("power2 on the monomial ideal x0(x0, x1) in three variables") {
  auto R = QQ(3);
  Ideal I = ideal_of(R, "x0^2, x0*x1");
  TheoremReport rep = check_power_bound_dim2(I, 3);
  CHECK(rep.verdict == Verdict::holds);
  CHECK(all_satisfied(rep));
  CHECK(rep.all_hypotheses_verified());  // monomial: generic CI is decided

  const Relation* e2 = find_rel(rep, "reg(S/I^j) <= max{E_j, a_2(T_j)}, j=2");
  REQUIRE(e2 != nullptr);
  CHECK(e2->lhs == ExtInt(3));
  CHECK(e2->rhs == ExtInt(3));
  const Relation* c1 = find_rel(
      rep, "reg(I^2) <= max{a_0+B_0, a_1+B'_1, a_2+B'_2, a_2+d_1+d_2} + 1");
  REQUIRE(c1 != nullptr);
  CHECK(c1->lhs == ExtInt(4));
  CHECK(c1->rhs == ExtInt(4));  // equality
  const Relation* c2 = find_rel(
      rep,
      "reg(I^j) <= max{a_0+2B_0, a_1+B'_1+B_0, a_2+B} + (j-3) B_0 + 1, j=3");
  REQUIRE(c2 != nullptr);
  CHECK(c2->lhs == ExtInt(6));
  CHECK(c2->rhs == ExtInt(6));  // equality
  const Relation* l3 = find_rel(
      rep, "reg(I^j) <= max{3 reg(I) + (j-3) B_0, reg(I^sat) + j B_0 - 2}, j=3");
  REQUIRE(l3 != nullptr);
  CHECK(l3->rhs == ExtInt(6));
}

TEST_CASE("power2 on a principal quadric requires the assertion") {
  auto R = QQ(3);
  Ideal I = ideal_of(R, "x0^2 + x1*x2");
  TheoremReport gate = check_power_bound_dim2(I, 2);
  CHECK(gate.verdict == Verdict::vacuous);  // non-monomial, no assertion

  TheoremReport rep = check_power_bound_dim2(I, 3, true);
  CHECK(rep.verdict == Verdict::holds);
  CHECK(all_satisfied(rep));
  CHECK(!rep.all_hypotheses_verified());  // generic CI merely asserted
  CHECK(!rep.counterexample_candidate);

  // A free module of rank one: T_j = 0 and every bound is met exactly.
  const Relation* e2 = find_rel(rep, "reg(S/I^j) <= max{E_j, a_2(T_j)}, j=2");
  REQUIRE(e2 != nullptr);
  CHECK(e2->lhs == ExtInt(3));
  CHECK(e2->rhs == ExtInt(3));
  const Relation* e3 = find_rel(rep, "reg(S/I^j) <= max{E_j, a_2(T_j)}, j=3");
  REQUIRE(e3 != nullptr);
  CHECK(e3->lhs == ExtInt(5));
  CHECK(e3->rhs == ExtInt(5));
  const Relation* c1 = find_rel(
      rep, "reg(I^2) <= max{a_0+B_0, a_1+B'_1, a_2+B'_2, a_2+d_1+d_2} + 1");
  REQUIRE(c1 != nullptr);
  CHECK(c1->lhs == ExtInt(4));
  CHECK(c1->rhs == ExtInt(4));
  const Relation* c2 = find_rel(
      rep,
      "reg(I^j) <= max{a_0+2B_0, a_1+B'_1+B_0, a_2+B} + (j-3) B_0 + 1, j=3");
  REQUIRE(c2 != nullptr);
  CHECK(c2->lhs == ExtInt(6));
  CHECK(c2->rhs == ExtInt(6));
}

TEST_CASE("power2 gate: monomial ideal not generically a complete intersection") {
  auto R = QQ(4);
  TheoremReport rep =
      check_power_bound_dim2(ideal_of(R, "x0^2, x0*x1, x1^2"), 2);
  CHECK(rep.verdict == Verdict::vacuous);
  const Hypothesis* h =
      find_hyp(rep, "complete intersection at top-dimensional primes");
  REQUIRE(h != nullptr);
  CHECK(h->status == HypStatus::failed);
}

// ---------------------------------------------------------------------------
// koszul
// ---------------------------------------------------------------------------

TEST_CASE("koszul bounds for one quadric on the free module, dim M' = 1") {
  auto R = QQ(2);
  TheoremReport rep =
      check_koszul_bounds(free_one(R), parse_polynomial_list(R, "x0^2"));
  CHECK(rep.verdict == Verdict::holds);
  CHECK(all_satisfied(rep));
  REQUIRE(rep.relations.size() == 5);  // rows i = 0,1,2 plus two reg bounds
  const Relation* row1 =
      find_rel(rep, "a_i(M') <= max_t{a_{i+t}(M) + d_1+..+d_t}, i=1");
  REQUIRE(row1 != nullptr);
  CHECK(row1->lhs == ExtInt(0));  // a_1(R/(x0^2)) = 0
  CHECK(row1->rhs == ExtInt(0));  // = a_2(R) + d_1
  const Relation* reg =
      find_rel(rep, "reg(M') <= max_t{a_t(M) + d_1+..+d_t} (dim M' = 1)");
  REQUIRE(reg != nullptr);
  CHECK(reg->lhs == ExtInt(1));
  CHECK(reg->rhs == ExtInt(1));
  const Relation* slack =
      find_rel(rep, "reg(M') <= reg(M) + sum(d_i - 1) (dim M' = 1)");
  REQUIRE(slack != nullptr);
  CHECK(slack->lhs == ExtInt(1));
  CHECK(slack->rhs == ExtInt(1));
}

TEST_CASE("koszul bounds for one quadric in three variables, dim M' = 2") {
  auto R = QQ(3);
  TheoremReport rep =
      check_koszul_bounds(free_one(R), parse_polynomial_list(R, "x0^2"));
  CHECK(rep.verdict == Verdict::holds);
  CHECK(all_satisfied(rep));
  const Relation* reg1 = find_rel(
      rep, "reg(M'/H^0(M')) <= max_t{a_{1+t}(M) + d_1+..+d_t} + 1 (dim M' = 2)");
  REQUIRE(reg1 != nullptr);
  CHECK(reg1->lhs == ExtInt(1));
  CHECK(reg1->rhs == ExtInt(1));
  const Relation* row2 =
      find_rel(rep, "a_i(M') <= max_t{a_{i+t}(M) + d_1+..+d_t}, i=2");
  REQUIRE(row2 != nullptr);
  CHECK(row2->lhs == ExtInt(-1));
  CHECK(row2->rhs == ExtInt(-1));
}

TEST_CASE("koszul gate and input validation") {
  auto R = QQ(2);
  auto S = quotient_of(R, "x0^2");
  TheoremReport rep =
      check_koszul_bounds(free_one(S), parse_polynomial_list(S, "x1"));
  CHECK(rep.verdict == Verdict::vacuous);

  CHECK_THROWS_AS(
      check_koszul_bounds(free_one(R), parse_polynomial_list(R, "x0 + x0^2")),
      std::invalid_argument);
  CHECK_THROWS_AS(
      check_koszul_bounds(free_one(R), {Polynomial::zero(R)}),
      std::invalid_argument);

  TheoremReport z = check_koszul_bounds(GradedModule::zero_module(R),
                                        parse_polynomial_list(R, "x0"));
  CHECK(z.verdict == Verdict::holds);
  CHECK(z.relations.empty());
}

// ---------------------------------------------------------------------------
// nonacyclic
// ---------------------------------------------------------------------------

TEST_CASE("nonacyclic bounds for the Koszul complex on a repeated form") {
  auto R = QQ(2);
  ChainComplex F = koszul_complex(R, parse_polynomial_list(R, "x0, x0"));
  TheoremReport rep = check_nonacyclic(F, free_one(R));
  CHECK(rep.verdict == Verdict::holds);
  CHECK(all_satisfied(rep));
  // H_0 = R/(x0) and H_1 = (R/(x0))(-1) are both one-dimensional, so the
  // epsilon bounds for the higher homology apply as well.
  REQUIRE(rep.relations.size() == 5);
  const Hypothesis* h = find_hyp(rep, "cd H_i <= 1 for i >= 1");
  REQUIRE(h != nullptr);
  CHECK(h->status == HypStatus::verified);
}

TEST_CASE("nonacyclic bounds degenerate gracefully on an acyclic complex") {
  auto R = QQ(2);
  ChainComplex F = koszul_complex(R, parse_polynomial_list(R, "x0, x1"));
  TheoremReport rep = check_nonacyclic(F, free_one(R));
  CHECK(rep.verdict == Verdict::holds);
  CHECK(all_satisfied(rep));
  REQUIRE(rep.relations.size() == 3);  // only the delta rows p = 0..2
}

TEST_CASE("nonacyclic requires a shared ring") {
  auto R = QQ(2);
  auto R3 = QQ(3);
  ChainComplex F = koszul_complex(R, parse_polynomial_list(R, "x0"));
  CHECK_THROWS_AS(check_nonacyclic(F, free_one(R3)), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// betti_transfer
// ---------------------------------------------------------------------------

TEST_CASE("betti transfer over the identity map is exact") {
  auto R = QQ(2);
  TheoremReport rep = check_betti_transfer(cyclic_of(R, "x0^2, x0*x1"), 2);
  CHECK(rep.verdict == Verdict::holds);
  CHECK(all_satisfied(rep));
  REQUIRE(rep.relations.size() == 15);  // five bounds per index i = 0..2
  const Relation* b2 = find_rel(rep, "b_i^S(M) <= max_p{b_{i-p}^R(M) + E_p}, i=2");
  REQUIRE(b2 != nullptr);
  CHECK(b2->lhs == ExtInt(3));
  CHECK(b2->rhs == ExtInt(3));
}

TEST_CASE("betti transfer along the broken-quadric projection") {
  auto R = QQ(2);
  auto S = quotient_of(R, "x0*x1");
  GradedModule M = GradedModule::cyclic(Ideal(S, parse_polynomial_list(S, "x0")));
  TheoremReport rep = check_betti_transfer(M, 4);
  CHECK(rep.verdict == Verdict::holds);
  CHECK(all_satisfied(rep));

  // reg_R(S) = 1, so the sandwich relations are present and b_i^S(M) = i
  // meets the linear bound exactly at every step.
  const Hypothesis* lin = find_hyp(rep, "reg_R(S) = 1");
  REQUIRE(lin != nullptr);
  CHECK(lin->status == HypStatus::verified);
  for (int i = 0; i <= 4; ++i) {
    const Relation* bi =
        find_rel(rep, "b_i^S(M) <= reg(M) + i, i=" + std::to_string(i));
    REQUIRE(bi != nullptr);
    CHECK(bi->lhs == ExtInt(i));
    CHECK(bi->rhs == ExtInt(i));
  }
  const Relation* comp = find_rel(rep, "b_i^S(M) <= max_p{b_{i-p}^R(M) + E_p}, i=4");
  REQUIRE(comp != nullptr);
  CHECK(comp->lhs == ExtInt(4));
  CHECK(comp->rhs == ExtInt(4));
}

TEST_CASE("betti transfer on the zero module is trivial") {
  auto R = QQ(2);
  TheoremReport rep = check_betti_transfer(GradedModule::zero_module(R), 3);
  CHECK(rep.verdict == Verdict::holds);
  CHECK(rep.relations.empty());
}

// ---------------------------------------------------------------------------
// intersect
// ---------------------------------------------------------------------------

TEST_CASE("intersection bound for two hyperplanes in P^3") {
  auto R = QQ(4);
  TheoremReport rep =
      check_intersection_bound({ideal_of(R, "x0"), ideal_of(R, "x1")});
  CHECK(rep.verdict == Verdict::holds);
  CHECK(all_satisfied(rep));
  CHECK(rep.all_hypotheses_verified());
  const Relation* r = rep.relations.empty() ? nullptr : &rep.relations.front();
  REQUIRE(r != nullptr);
  CHECK(r->lhs == ExtInt(0));
  CHECK(r->rhs == ExtInt(0));
}

TEST_CASE("intersection bound input validation") {
  auto R = QQ(3);
  CHECK_THROWS_AS(check_intersection_bound({ideal_of(R, "x0")}),
                  std::invalid_argument);
  auto R4 = QQ(4);
  CHECK_THROWS_AS(
      check_intersection_bound({ideal_of(R, "x0"), ideal_of(R4, "x0")}),
      std::invalid_argument);
}

// ---------------------------------------------------------------------------
// kahler
// ---------------------------------------------------------------------------

TEST_CASE("kahler bounds for the polynomial ring in three variables") {
  auto R = QQ(3);
  TheoremReport rep = check_kahler_bounds(R);
  CHECK(rep.verdict == Verdict::holds);
  CHECK(all_satisfied(rep));
  CHECK(rep.all_hypotheses_verified());
  REQUIRE(rep.relations.size() == 2);  // the unconditional rows only
  const Relation* top = find_rel(rep, "a_3(Omega) <= a_3(B) + 1");
  REQUIRE(top != nullptr);
  CHECK(top->lhs == ExtInt(-2));  // Omega = R(-1)^3
  CHECK(top->rhs == ExtInt(-2));
}

TEST_CASE("kahler bounds for the quadric cone with asserted hypotheses") {
  auto R = QQ(4);
  auto B = quotient_of(R, "x0*x1 - x2*x3");
  KahlerAssertions assertions;
  assertions.generically_ci = true;
  assertions.generically_reduced = true;
  assertions.reduced_ci_off_points = true;
  TheoremReport rep = check_kahler_bounds(B, assertions);
  CHECK(rep.verdict == Verdict::holds);
  CHECK(all_satisfied(rep));
  CHECK(!rep.all_hypotheses_verified());
  REQUIRE(rep.relations.size() == 4);
  const Relation* top = find_rel(rep, "a_3(Omega) <= a_3(B) + 1");
  REQUIRE(top != nullptr);
  CHECK(top->rhs == ExtInt(-1));
  CHECK(top->satisfied);
  // The differentials of the cone have no finite-length pieces: the asserted
  // rows bound a_0 and a_1 by -infinity and the computation agrees.
  const Relation* a1 =
      find_rel(rep, "a_1(Omega) <= max{a_1(B)+1, a_2(B)+b_0, a_3(B)+b_1}");
  REQUIRE(a1 != nullptr);
  CHECK(a1->lhs == ExtInt::neg_inf());
}

TEST_CASE("kahler gates: wrong dimension and non-CI monomial modulus") {
  auto R2 = QQ(2);
  TheoremReport wrong_dim = check_kahler_bounds(R2);
  CHECK(wrong_dim.verdict == Verdict::vacuous);

  auto R5 = QQ(5);
  auto B = quotient_of(R5, "x0^2, x0*x1, x1^2");
  TheoremReport rep = check_kahler_bounds(B);
  CHECK(rep.verdict == Verdict::vacuous);
  const Hypothesis* h = find_hyp(rep, "generically a complete intersection");
  REQUIRE(h != nullptr);
  CHECK(h->status == HypStatus::failed);
}
