#include "regalia/checks.hpp"

#include "regalia/ainvariants.hpp"
#include "regalia/betti.hpp"
#include "regalia/functors.hpp"
#include "regalia/groebner.hpp"
#include "regalia/hilbert.hpp"
#include "regalia/homology.hpp"
#include "regalia/resolution.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace regalia {

namespace {

ExtInt emax2(const ExtInt& a, const ExtInt& b) { return a < b ? b : a; }

ExtInt emax3(const ExtInt& a, const ExtInt& b, const ExtInt& c) {
  return emax2(emax2(a, b), c);
}

// Floor division for possibly negative numerators (C++ / truncates).
long long floordiv(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Ideal modulus_ideal(const RingPtr& S) {
  return Ideal(S->ambient(), S->modulus_gens());
}

// S viewed as a module over its ambient polynomial ring (R itself when S is
// already polynomial).
GradedModule ring_as_ambient_module(const RingPtr& S) {
  if (S->is_polynomial_ring())
    return GradedModule::free_module(FreeModule{S, {0}});
  return GradedModule::cyclic(modulus_ideal(S));
}

AInvariants ring_a_invariants(const RingPtr& S) {
  return a_invariants(ring_as_ambient_module(S));
}

ExtInt ring_regularity(const RingPtr& S) {
  if (S->is_polynomial_ring()) return ExtInt(0);
  return regularity(ring_as_ambient_module(S), RegRoute::betti);
}

// reg of S through the part of positive depth (the scheme-side convention).
ExtInt ring_scheme_reg(const RingPtr& S) {
  if (S->is_polynomial_ring()) return ExtInt(0);
  return ring_a_invariants(S).reg1();
}

// Krull dimension of S itself; -1 for the zero ring.
long long ring_dim(const RingPtr& S) {
  if (S->is_polynomial_ring()) return S->nvars();
  ExtInt d = krull_dim(modulus_ideal(S));
  return d.is_finite() ? d.value() : -1;
}

// The ideal I as a module over its ring: generators in their degrees,
// relations the syzygies among them.
GradedModule ideal_as_module(const Ideal& I) {
  return GradedModule(syzygy_matrix(generator_row(I)));
}

// Minimal generator degrees (row 0 of the Betti table), descending, with
// multiplicity.
std::vector<long long> min_gen_degrees_desc(const BettiTable& bet) {
  std::vector<long long> ds;
  for (const auto& [ij, cnt] : bet.entries())
    if (ij.first == 0)
      for (long long t = 0; t < cnt; ++t) ds.push_back(ij.second);
  std::sort(ds.begin(), ds.end(), std::greater<long long>());
  return ds;
}

std::string module_desc(const GradedModule& M) {
  return "coker of a " + std::to_string(M.presentation().rows()) + "x" +
         std::to_string(M.presentation().cols()) + " graded matrix over " +
         M.ring()->description();
}

std::string ideal_desc(const Ideal& I) {
  return I.str() + " over " + I.ring()->description();
}

std::string at_index(const std::string& name, const char* var, long long v) {
  return name + ", " + var + "=" + std::to_string(v);
}

}  // namespace

// ---------------------------------------------------------------------------
// regfpd: reg(M) = reg_S(M) + reg(S) for finite projective dimension
// ---------------------------------------------------------------------------

TheoremReport check_regfpd(const GradedModule& M, int cap) {
  TheoremReport rep;
  rep.theorem = "regfpd";
  rep.input = module_desc(M);
  const RingPtr& S = M.ring();

  ExtInt lhs = regularity(M, RegRoute::duality);
  if (S->is_polynomial_ring()) {
    rep.add_hypothesis("finite projective dimension over S", HypStatus::verified,
                       "automatic over a polynomial ring");
    ExtInt rhs = regularity(M, RegRoute::betti);
    rep.add_relation("reg(M) = reg_S(M) + reg(S)", lhs, "=", rhs);
    rep.finalize(false);
    return rep;
  }

  ExtInt pd = M.proj_dim(cap);
  if (pd.is_pos_inf()) {
    rep.add_hypothesis("finite projective dimension over S", HypStatus::failed,
                       "minimal resolution still nonzero at the cap");
    rep.finalize(false);
    return rep;
  }
  rep.add_hypothesis("finite projective dimension over S", HypStatus::verified,
                     "pdim = " + pd.str());
  ExtInt rhs = M.betti(cap).reg() + ring_regularity(S);
  rep.add_relation("reg(M) = reg_S(M) + reg(S)", lhs, "=", rhs);
  rep.finalize(false);
  return rep;
}

// ---------------------------------------------------------------------------
// regtor: max_i {reg Tor_i - i} = sum reg M_j - (s-1) reg S
// ---------------------------------------------------------------------------

TheoremReport check_regtor(const std::vector<GradedModule>& mods, int cap) {
  if (mods.size() < 2)
    throw std::invalid_argument("check_regtor requires at least two modules");
  const RingPtr& S = mods.front().ring();
  for (const auto& m : mods)
    if (!same_ring(m.ring(), S))
      throw std::invalid_argument("check_regtor: modules must share one ring");

  const int s = static_cast<int>(mods.size());
  TheoremReport rep;
  rep.theorem = "regtor";
  rep.input =
      std::to_string(s) + " modules over " + S->description();

  ExtInt regS = ring_regularity(S);

  bool any_zero = false;
  for (const auto& m : mods) any_zero = any_zero || m.is_zero();
  if (any_zero) {
    rep.add_hypothesis("at least s-1 modules of finite projective dimension",
                       HypStatus::verified, "a factor is the zero module");
    rep.add_hypothesis("dim Tor_i <= 1 for i > 0", HypStatus::verified,
                       "all Tor modules vanish");
    ExtInt rhs = ExtInt(0);
    for (const auto& m : mods) rhs = rhs + regularity(m, RegRoute::duality);
    if (regS.is_finite())
      rhs = rhs + ExtInt(-(static_cast<long long>(s) - 1) * regS.value());
    rep.add_relation("max_i{reg(Tor_i) - i} = sum_j reg(M_j) - (s-1) reg(S)",
                     ExtInt::neg_inf(), "=", rhs);
    rep.finalize(false);
    return rep;
  }

  std::vector<int> finite, infinite;
  std::vector<ExtInt> pd(static_cast<size_t>(s), ExtInt(0));
  for (int i = 0; i < s; ++i) {
    pd[static_cast<size_t>(i)] = mods[static_cast<size_t>(i)].proj_dim(cap);
    (pd[static_cast<size_t>(i)].is_finite() ? finite : infinite).push_back(i);
  }
  if (infinite.size() > 1) {
    rep.add_hypothesis(
        "at least s-1 modules of finite projective dimension", HypStatus::failed,
        std::to_string(infinite.size()) + " of " + std::to_string(s) +
            " modules have no finite resolution within the cap");
    rep.finalize(false);
    return rep;
  }
  rep.add_hypothesis(
      "at least s-1 modules of finite projective dimension", HypStatus::verified,
      infinite.empty()
          ? "all projective dimensions finite"
          : "module " + std::to_string(infinite.front() + 1) +
                " possibly of infinite projective dimension; tensored last");

  std::vector<GradedModule> arranged;
  arranged.reserve(mods.size());
  long long L = 0;
  for (int i : finite) {
    arranged.push_back(mods[static_cast<size_t>(i)]);
    L += pd[static_cast<size_t>(i)].value();
  }
  for (int i : infinite) arranged.push_back(mods[static_cast<size_t>(i)]);
  if (infinite.empty())
    L -= pd[static_cast<size_t>(finite.back())].value();  // last factor is not resolved

  std::vector<Subquotient> tors;
  tors.reserve(static_cast<size_t>(L) + 1);
  bool dim_ok = true;
  std::string dims;
  for (long long i = 0; i <= L; ++i) {
    tors.push_back(tor_multi(arranged, static_cast<int>(i), cap));
    if (i > 0 && !tors.back().is_zero()) {
      ExtInt di = tors.back().dim();
      if (ExtInt(1) < di) {
        dim_ok = false;
        if (!dims.empty()) dims += ", ";
        dims += "dim Tor_" + std::to_string(i) + " = " + di.str();
      }
    }
  }
  rep.add_hypothesis("dim Tor_i <= 1 for i > 0",
                     dim_ok ? HypStatus::verified : HypStatus::failed, dims);
  if (!dim_ok) {
    rep.finalize(false);
    return rep;
  }

  ExtInt lhs = ExtInt::neg_inf();
  for (long long i = 0; i <= L; ++i) {
    if (tors[static_cast<size_t>(i)].is_zero()) continue;
    ExtInt r = regularity(tors[static_cast<size_t>(i)].to_module(),
                          RegRoute::duality);
    lhs = emax2(lhs, r + ExtInt(-i));
  }
  ExtInt rhs = ExtInt(0);
  for (const auto& m : mods) rhs = rhs + regularity(m, RegRoute::duality);
  if (regS.is_finite())
    rhs = rhs + ExtInt(-(static_cast<long long>(s) - 1) * regS.value());
  rep.add_relation("max_i{reg(Tor_i) - i} = sum_j reg(M_j) - (s-1) reg(S)", lhs,
                   "=", rhs);
  rep.finalize(false);
  return rep;
}

// ---------------------------------------------------------------------------
// rigidity: Tor rigidity, the pdim/codim count, and the three-way equivalence
// ---------------------------------------------------------------------------

TheoremReport check_rigidity_and_proper(const std::vector<GradedModule>& mods,
                                        int cap) {
  if (mods.size() < 2)
    throw std::invalid_argument(
        "check_rigidity_and_proper requires at least two modules");
  const RingPtr& S = mods.front().ring();
  for (const auto& m : mods)
    if (!same_ring(m.ring(), S))
      throw std::invalid_argument(
          "check_rigidity_and_proper: modules must share one ring");

  const int s = static_cast<int>(mods.size());
  TheoremReport rep;
  rep.theorem = "rigidity";
  rep.input = std::to_string(s) + " modules over " + S->description();
  rep.note =
      "graded reading: depth and dimension are taken at the irrelevant "
      "maximal ideal";

  if (!S->is_polynomial_ring()) {
    rep.add_hypothesis("regular (polynomial) base ring", HypStatus::failed,
                       "ring has a nontrivial modulus");
    rep.finalize(false);
    return rep;
  }
  rep.add_hypothesis("regular (polynomial) base ring", HypStatus::verified, "");
  const long long n = S->nvars();

  bool any_zero = false;
  for (const auto& m : mods) any_zero = any_zero || m.is_zero();
  if (any_zero) {
    rep.note = "a factor is the zero module; all Tor modules vanish and "
               "rigidity holds trivially";
    rep.add_relation("rigidity: nonzero Tor indices form an initial segment",
                     ExtInt(0), "=", ExtInt(0));
    rep.finalize(false);
    return rep;
  }

  std::vector<long long> pdim(static_cast<size_t>(s), 0);
  long long sum_pdim = 0;
  for (int i = 0; i < s; ++i) {
    ExtInt p = mods[static_cast<size_t>(i)].proj_dim(cap);
    // A user-supplied cap below the syzygy bound can truncate; the default
    // cap always terminates over a polynomial ring.
    if (!p.is_finite()) p = mods[static_cast<size_t>(i)].proj_dim(-1);
    pdim[static_cast<size_t>(i)] = p.value();
    sum_pdim += pdim[static_cast<size_t>(i)];
  }
  long long L = 0;
  for (int i = 0; i + 1 < s; ++i) L += pdim[static_cast<size_t>(i)];

  std::vector<Subquotient> tors;
  tors.reserve(static_cast<size_t>(L) + 1);
  long long nonzero_count = 0;
  long long j = -1;
  for (long long i = 0; i <= L; ++i) {
    tors.push_back(tor_multi(mods, static_cast<int>(i), cap));
    if (!tors.back().is_zero()) {
      ++nonzero_count;
      j = i;
    }
  }
  rep.add_relation("rigidity: nonzero Tor indices form an initial segment",
                   ExtInt(nonzero_count), "=", ExtInt(j + 1));

  if (j < 0) {
    rep.note = "the tensor product vanishes; rigidity holds trivially";
    rep.finalize(false);
    return rep;
  }

  std::map<long long, AInvariants> tor_a;
  auto a_of = [&](long long i) -> const AInvariants& {
    auto it = tor_a.find(i);
    if (it == tor_a.end())
      it = tor_a
               .emplace(i, a_invariants(
                               tors[static_cast<size_t>(i)].to_module()))
               .first;
    return it->second;
  };

  ExtInt dimTj = tors[static_cast<size_t>(j)].dim();
  long long eps = n + j - sum_pdim;
  rep.add_relation("0 <= epsilon", ExtInt(0), "<=", ExtInt(eps));
  rep.add_relation("epsilon <= dim Tor_j", ExtInt(eps), "<=", dimTj);

  ExtInt eps0 = ExtInt::pos_inf();
  for (long long i = 0; i <= j; ++i) {
    ExtInt dep = a_of(j - i).depth();
    if (dep.is_pos_inf()) continue;  // zero module contributes nothing
    eps0 = eps0 < dep + ExtInt(i) ? eps0 : dep + ExtInt(i);
  }
  rep.add_relation("epsilon >= epsilon_0 = min_i{depth Tor_{j-i} + i}",
                   ExtInt(eps), ">=", eps0);
  ExtInt depthTj = a_of(j).depth();
  if (eps0 == depthTj)
    rep.add_relation("epsilon = epsilon_0 (epsilon_0 attained at depth Tor_j)",
                     ExtInt(eps), "=", eps0);

  // Three-way equivalence.
  bool tor1_zero = (L < 1) || tors[1].is_zero();
  bool cond_a = tor1_zero && a_of(0).cohen_macaulay();
  ExtInt dimT0 = tors[0].dim();
  bool cond_b = dimT0.is_finite() && (n - dimT0.value() == sum_pdim);
  long long codim_sum = 0;
  bool all_cm = true;
  bool dims_finite = dimT0.is_finite();
  for (const auto& m : mods) {
    AInvariants Am = a_invariants(m);
    all_cm = all_cm && Am.cohen_macaulay();
    ExtInt dm = m.dim();
    if (!dm.is_finite()) {
      dims_finite = false;
      continue;
    }
    codim_sum += n - dm.value();
  }
  bool cond_c = dims_finite && (n - dimT0.value() == codim_sum) && all_cm;
  int mask = (cond_a ? 1 : 0) | (cond_b ? 2 : 0) | (cond_c ? 4 : 0);
  rep.add_relation(
      "equivalence: [Tor_1 = 0 and tensor CM] <=> [codim = sum pdim] <=> "
      "[proper and all CM]",
      ExtInt(mask), "=", ExtInt(mask == 7 ? 7 : 0));

  rep.finalize(false);
  return rep;
}

// ---------------------------------------------------------------------------
// frobenius: regularity bounds for Frobenius powers
// ---------------------------------------------------------------------------

TheoremReport check_frobenius_bound(const GradedModule& M, int e_max,
                                    FrobeniusAssertions assertions) {
  const RingPtr& S = M.ring();
  long long p = S->field().characteristic();
  if (p == 0)
    throw std::invalid_argument(
        "check_frobenius_bound requires positive characteristic");
  if (e_max < 1) throw std::invalid_argument("e_max must be at least 1");

  TheoremReport rep;
  rep.theorem = "frobenius";
  rep.input = module_desc(M);
  const RingPtr& R = S->ambient_or_self();

  Ideal sing = Ideal::unit(R);
  bool caveat = false;
  try {
    sing = singular_locus_ideal(S, assertions.equidimensional, &caveat);
  } catch (const std::invalid_argument& ex) {
    rep.add_hypothesis("Jacobian criterion applicable", HypStatus::failed,
                       ex.what());
    rep.finalize(false);
    return rep;
  }
  if (assertions.equidimensional && !S->is_polynomial_ring() &&
      S->modulus_gens().size() > 1)
    rep.add_hypothesis("equidimensional defining ideal", HypStatus::asserted,
                       "required for the Jacobian-minor singular locus; not "
                       "machine-verified");
  if (caveat)
    rep.add_hypothesis(
        "Jacobian criterion reliable in this characteristic",
        HypStatus::asserted,
        "characteristic does not exceed a defining degree; inseparability "
        "could enlarge the true singular locus");

  std::vector<Polynomial> cg = sing.gens();
  Ideal ann = M.annihilator();  // named: gens() must outlive the loop
  for (const auto& f : ann.gens())
    cg.push_back(S->is_polynomial_ring() ? f : S->lift(f));
  ExtInt sd = krull_dim(Ideal(R, cg));
  {
    bool ok = !(ExtInt(1) < sd);
    rep.add_hypothesis("dim(Sing(S) cap Supp(M)) <= 1",
                       ok ? HypStatus::verified : HypStatus::failed,
                       "cone dimension " + sd.str());
    if (!ok) {
      rep.finalize(false);
      return rep;
    }
  }

  const long long dimS = ring_dim(S);
  AInvariants aS = ring_a_invariants(S);
  ExtInt regS = ring_regularity(S);
  ExtInt regM = regularity(M, RegRoute::duality);
  const Resolution& res = M.resolution(-1);
  BettiTable bet = M.betti(-1);
  bool data_truncated = res.truncated && res.length() < dimS;
  bool s_not_regular =
      !S->is_polynomial_ring() && !krull_dim(sing).is_neg_inf();

  for (int e = 1; e <= e_max; ++e) {
    long long q = 1;
    for (int t = 0; t < e; ++t) {
      if (q > (1LL << 40))
        throw std::invalid_argument("p^e too large for exact bound evaluation");
      q *= p;
    }
    std::string sfx = ", e=" + std::to_string(e);
    GradedModule FM = frobenius_power(M, e);
    AInvariants aFM = a_invariants(FM);
    ExtInt lhs_reg = aFM.reg();

    ExtInt sharp = ExtInt::neg_inf();
    for (long long i = 0; i <= dimS; ++i) {
      ExtInt bi = bet.b(static_cast<int>(i));
      if (!bi.is_finite()) continue;
      for (long long jj = i; jj <= dimS; ++jj) {
        ExtInt aj = aS.a_at(static_cast<int>(jj));
        if (!aj.is_finite()) continue;
        sharp = emax2(sharp, ExtInt(q * bi.value() + aj.value() + jj - i));
      }
    }
    rep.add_relation(
        "reg(F^e M) <= max_{i<=j<=dim S}{q b_i(M) + a_j(S) + j - i}" + sfx,
        lhs_reg, "<=", sharp);

    ExtInt weak = ExtInt::neg_inf();
    for (long long i = 0; i <= dimS; ++i) {
      ExtInt bi = bet.b(static_cast<int>(i));
      if (bi.is_finite()) weak = emax2(weak, ExtInt(q * bi.value() - i));
    }
    rep.add_relation("reg(F^e M) <= reg(S) + max_i{q b_i(M) - i}" + sfx,
                     lhs_reg, "<=", regS + weak);

    for (long long ell = 0; ell <= dimS; ++ell) {
      ExtInt rhs = ExtInt::neg_inf();
      for (long long i = 0; i + ell <= dimS; ++i) {
        ExtInt bi = bet.b(static_cast<int>(i));
        ExtInt ail = aS.a_at(static_cast<int>(i + ell));
        if (bi.is_finite() && ail.is_finite())
          rhs = emax2(rhs, ExtInt(ail.value() + q * bi.value()));
      }
      rep.add_relation("a_" + std::to_string(ell) +
                           "(F^e M) <= max_i{a_{i+l}(S) + q b_i(M)}" + sfx,
                       aFM.a_at(static_cast<int>(ell)), "<=", rhs);
    }

    if (s_not_regular) {
      ExtInt rhs = ExtInt::neg_inf();
      if (regM.is_finite())
        rhs = regS + ExtInt(q * (regM.value() +
                                 (dimS / 2) * (regS.value() - 1) + dimS));
      rep.add_relation(
          "reg(F^e M) <= reg(S) + q(reg(M) + floor(dim S/2)(reg(S)-1) + dim "
          "S)" +
              sfx,
          lhs_reg, "<=", rhs);
    }
  }
  rep.finalize(data_truncated);
  return rep;
}

// ---------------------------------------------------------------------------
// power1: powers of an ideal with cd(S/I) <= 1
// ---------------------------------------------------------------------------

TheoremReport check_power_bound_cd1(const Ideal& I, int m_max) {
  if (I.is_zero_ideal() || I.is_unit_ideal())
    throw std::invalid_argument(
        "check_power_bound_cd1 requires a proper nonzero ideal");
  if (m_max < 0) throw std::invalid_argument("m_max must be nonnegative");

  TheoremReport rep;
  rep.theorem = "power1";
  rep.input = ideal_desc(I);

  AInvariants A = a_invariants(GradedModule::cyclic(I));
  ExtInt cd = A.cd();
  bool ok = !(ExtInt(1) < cd);
  rep.add_hypothesis("cd(S/I) <= 1",
                     ok ? HypStatus::verified : HypStatus::failed,
                     "cd = " + cd.str());
  if (!ok) {
    rep.finalize(false);
    return rep;
  }

  GradedModule MI = ideal_as_module(I);
  BettiTable bi = MI.betti();
  ExtInt b0 = bi.b(0);
  ExtInt b1 = bi.b(1);
  ExtInt reg1I = bi.reg_upto(1);
  ExtInt a0 = A.a_at(0);
  ExtInt a1 = A.a_at(1);

  for (int m = 0; m <= m_max; ++m) {
    AInvariants AP =
        (m == 0) ? A
                 : a_invariants(GradedModule::cyclic(ideal_power(I, m + 1)));
    std::string sfx = ", m=" + std::to_string(m);
    rep.add_relation("a_1(S/I^{m+1}) <= a_1(S/I) + m b_0(I)" + sfx, AP.a_at(1),
                     "<=", a1 + ExtInt(m * b0.value()));
    ExtInt inner = emax2(a0 + b0, a1 + b1);
    rep.add_relation(
        "a_0(S/I^{m+1}) <= max{a_0(S/I)+b_0(I), a_1(S/I)+b_1(I)} + (m-1) "
        "b_0(I)" +
            sfx,
        AP.a_at(0), "<=", inner + ExtInt((m - 1) * b0.value()));
    ExtInt inner2 = emax2(a0 + b0, a1 + ExtInt(1) + reg1I);
    rep.add_relation(
        "reg(S/I^{m+1}) <= max{a_0(S/I)+b_0(I), a_1(S/I)+1+reg_1(I)} + (m-1) "
        "b_0(I)" +
            sfx,
        AP.reg(), "<=", inner2 + ExtInt((m - 1) * b0.value()));
  }
  rep.finalize(false);
  return rep;
}

// ---------------------------------------------------------------------------
// power2: powers of a height-(n-2) ideal over a polynomial ring
// ---------------------------------------------------------------------------

TheoremReport check_power_bound_dim2(const Ideal& I, int j_max,
                                     bool assert_generic_ci) {
  if (I.is_zero_ideal() || I.is_unit_ideal())
    throw std::invalid_argument(
        "check_power_bound_dim2 requires a proper nonzero ideal");
  if (j_max < 2) throw std::invalid_argument("j_max must be at least 2");

  TheoremReport rep;
  rep.theorem = "power2";
  rep.input = ideal_desc(I);
  const RingPtr& R = I.ring();

  if (!R->is_polynomial_ring()) {
    rep.add_hypothesis("polynomial base ring", HypStatus::failed,
                       "ring has a nontrivial modulus");
    rep.finalize(false);
    return rep;
  }
  rep.add_hypothesis("polynomial base ring", HypStatus::verified, "");

  ExtInt d = krull_dim(I);
  bool dim_ok = d == ExtInt(2);
  rep.add_hypothesis("dim(R/I) = 2",
                     dim_ok ? HypStatus::verified : HypStatus::failed,
                     "dim = " + d.str());
  if (!dim_ok) {
    rep.finalize(false);
    return rep;
  }

  if (is_monomial_ideal(I)) {
    bool gci = monomial_generic_ci(I);
    rep.add_hypothesis("complete intersection at top-dimensional primes",
                       gci ? HypStatus::verified : HypStatus::failed,
                       "decided on the monomial support");
    if (!gci) {
      rep.finalize(false);
      return rep;
    }
  } else if (assert_generic_ci) {
    rep.add_hypothesis("complete intersection at top-dimensional primes",
                       HypStatus::asserted,
                       "not machine-verified for non-monomial input");
  } else {
    rep.add_hypothesis("complete intersection at top-dimensional primes",
                       HypStatus::failed,
                       "cannot verify for non-monomial input; pass the "
                       "assertion to proceed");
    rep.finalize(false);
    return rep;
  }

  AInvariants A = a_invariants(GradedModule::cyclic(I));
  ExtInt a0 = A.a_at(0);
  ExtInt a1 = A.a_at(1);
  ExtInt a2 = A.a_at(2);
  GradedModule MI = ideal_as_module(I);
  BettiTable bi = MI.betti();
  // B_j = max top degree among the first j+1 steps of the resolution of the
  // module I; the shifted variants absorb the homological twist so the bounds
  // stay valid when the resolution is shorter than three steps.
  long long B0 = bi.b(0).value();  // finite: I is proper and nonzero
  long long B1 = std::max(B0, bi.b(1).is_finite() ? bi.b(1).value() : B0);
  long long B2 = std::max(B1, bi.b(2).is_finite() ? bi.b(2).value() : B1);
  long long B1p = std::max(B1, B0 + 1);
  long long B2p = std::max({B2, B1 + 1, B0 + 2});
  std::vector<long long> degs = min_gen_degrees_desc(bi);
  ExtInt dd = degs.size() >= 2 ? ExtInt(degs[0] + degs[1]) : ExtInt::neg_inf();
  ExtInt dd2 =
      degs.size() >= 2 ? ExtInt(2 * degs[0] + degs[1]) : ExtInt::neg_inf();
  ExtInt regI = bi.reg();
  Ideal Isat = saturation(I);
  ExtInt regIsat = ideal_as_module(Isat).betti().reg();

  ExtInt a2T_prev = ExtInt::neg_inf();
  AInvariants Aprev = A;  // a-invariants of S/I^{j-1}
  for (int j = 2; j <= j_max; ++j) {
    std::string sfx = ", j=" + std::to_string(j);
    Ideal Ij = ideal_power(I, j);
    ExtInt lhs = ideal_as_module(Ij).betti().reg();  // reg of the module I^j
    AInvariants Aj = a_invariants(GradedModule::cyclic(Ij));
    ExtInt lhs_cyc = Aj.reg();  // reg(S/I^j)

    // Kernel-module route: E_j collects a_i(S/I^{j-1}) + B'_i.
    ExtInt Ej = emax3(Aprev.a_at(0) + ExtInt(B0), Aprev.a_at(1) + ExtInt(B1p),
                      Aprev.a_at(2) + ExtInt(B2p));
    PowerKernel pk = power_kernel(I, j);
    ExtInt a2T = a_invariants(pk.T.to_module()).a_at(2);
    rep.add_relation("reg(S/I^j) <= max{E_j, a_2(T_j)}" + sfx, lhs_cyc, "<=",
                     emax2(Ej, a2T));
    if (j == 2) {
      rep.add_relation("a_2(T_2) <= a_2(S/I) + d_1 + d_2", a2T, "<=", a2 + dd);
    } else {
      rep.add_relation("a_2(T_j) <= a_2(T_{j-1}) + b_0(I)" + sfx, a2T, "<=",
                       a2T_prev + ExtInt(B0));
    }

    // Closed-form chains.
    if (j == 2) {
      ExtInt r1 = emax2(emax3(a0 + ExtInt(B0), a1 + ExtInt(B1p),
                              a2 + ExtInt(B2p)),
                        a2 + dd) +
                  ExtInt(1);
      rep.add_relation(
          "reg(I^2) <= max{a_0+B_0, a_1+B'_1, a_2+B'_2, a_2+d_1+d_2} + 1", lhs,
          "<=", r1);
      long long inner = std::max({B0, B1 - 1, B2 - 2});
      ExtInt r2 = emax2(regI + ExtInt(inner), a2 + ExtInt(2 * B0 + 1));
      rep.add_relation(
          "reg(I^2) <= max{reg(I) + max{B_0, B_1-1, B_2-2}, a_2 + 2 B_0 + 1}",
          lhs, "<=", r2);
      ExtInt r3 =
          emax2(ExtInt(2 * regI.value()), regIsat + ExtInt(2 * B0 - 2));
      rep.add_relation("reg(I^2) <= max{2 reg(I), reg(I^sat) + 2 B_0 - 2}", lhs,
                       "<=", r3);
    } else {
      ExtInt Bcap = emax3(ExtInt(B0 + B2p), ExtInt(2 * B1p), dd2);
      ExtInt r1 = emax3(a0 + ExtInt(2 * B0), a1 + ExtInt(B0 + B1p), a2 + Bcap) +
                  ExtInt((j - 3) * B0 + 1);
      rep.add_relation(
          "reg(I^j) <= max{a_0+2B_0, a_1+B'_1+B_0, a_2+B} + (j-3) B_0 + 1" +
              sfx,
          lhs, "<=", r1);
      ExtInt t3 = ExtInt(3 * regI.value() + (j - 3) * B0);
      ExtInt r2 =
          emax2(t3, a2 + ExtInt(static_cast<long long>(j) * B0 + 1));
      rep.add_relation(
          "reg(I^j) <= max{3 reg(I) + (j-3) B_0, a_2 + j B_0 + 1}" + sfx, lhs,
          "<=", r2);
      ExtInt r3 = emax2(
          t3, regIsat + ExtInt(static_cast<long long>(j) * B0 - 2));
      rep.add_relation(
          "reg(I^j) <= max{3 reg(I) + (j-3) B_0, reg(I^sat) + j B_0 - 2}" + sfx,
          lhs, "<=", r3);
    }
    a2T_prev = a2T;
    Aprev = Aj;
  }
  rep.finalize(false);
  return rep;
}

// ---------------------------------------------------------------------------
// koszul: hypersurface sections
// ---------------------------------------------------------------------------

TheoremReport check_koszul_bounds(const GradedModule& M,
                                  const std::vector<Polynomial>& forms) {
  const RingPtr& R = M.ring();
  TheoremReport rep;
  rep.theorem = "koszul";
  rep.input = module_desc(M) + " cut by " + std::to_string(forms.size()) +
              " forms";

  if (!R->is_polynomial_ring()) {
    rep.add_hypothesis("polynomial base ring", HypStatus::failed,
                       "ring has a nontrivial modulus");
    rep.finalize(false);
    return rep;
  }
  rep.add_hypothesis("polynomial base ring", HypStatus::verified, "");

  std::vector<Polynomial> sorted = forms;
  for (const auto& f : sorted) {
    if (f.is_zero() || !f.is_homogeneous() || !(ExtInt(0) < f.degree()))
      throw std::invalid_argument(
          "check_koszul_bounds: forms must be nonzero, homogeneous, of "
          "positive degree");
  }
  std::sort(sorted.begin(), sorted.end(),
            [](const Polynomial& a, const Polynomial& b) {
              return b.degree() < a.degree();
            });
  std::vector<long long> dsum(sorted.size() + 1, 0);  // d_1 + ... + d_t
  for (size_t t = 0; t < sorted.size(); ++t)
    dsum[t + 1] = dsum[t] + sorted[t].degree().value();

  if (M.is_zero()) {
    rep.note = "the module is zero; all bounds are trivial";
    rep.finalize(false);
    return rep;
  }

  const GradedMatrix& pres = M.presentation();
  const FreeModule& F = pres.target();
  std::vector<int> ext_twists;
  for (const auto& f : sorted)
    for (int k = 0; k < F.rank(); ++k)
      ext_twists.push_back(F.twist(k) +
                           static_cast<int>(f.degree().value()));
  GradedMatrix ext(F, FreeModule{R, ext_twists});
  {
    int c = 0;
    for (const auto& f : sorted)
      for (int k = 0; k < F.rank(); ++k) ext.set_entry(k, c++, f);
  }
  GradedModule Mp(pres.concat_columns(ext));

  AInvariants A = a_invariants(M);
  AInvariants Ap = a_invariants(Mp);
  ExtInt delta = M.dim();
  ExtInt deltap = Mp.dim();
  const long long dl = delta.is_finite() ? delta.value() : 0;
  const long long dpl = deltap.is_finite() ? deltap.value() : 0;
  const long long s = static_cast<long long>(sorted.size());
  const long long n = R->nvars();

  auto rhs_row = [&](long long i) {
    ExtInt rhs = ExtInt::neg_inf();
    long long tmax = std::min(dl - i, s);
    for (long long t = 0; t <= tmax; ++t)
      rhs = emax2(rhs, A.a_at(static_cast<int>(i + t)) +
                           ExtInt(dsum[static_cast<size_t>(t)]));
    return rhs;
  };

  for (long long i = std::max(0LL, dpl - 1); i <= n; ++i)
    rep.add_relation(
        at_index("a_i(M') <= max_t{a_{i+t}(M) + d_1+..+d_t}", "i", i),
        Ap.a_at(static_cast<int>(i)), "<=", rhs_row(i));

  if (deltap == ExtInt(1)) {
    // reg(M') = max{a_0(M'), a_1(M') + 1}; bound each row.
    ExtInt rhs = emax2(rhs_row(0), rhs_row(1) + ExtInt(1));
    rep.add_relation("reg(M') <= max_t{a_t(M) + d_1+..+d_t} (dim M' = 1)",
                     Ap.reg(), "<=", rhs);
    long long k = std::min(dl, s);
    ExtInt slack = ExtInt(dsum[static_cast<size_t>(std::max(0LL, k))] -
                          std::max(0LL, k));
    rep.add_relation("reg(M') <= reg(M) + sum(d_i - 1) (dim M' = 1)", Ap.reg(),
                     "<=", A.reg() + slack);
  }
  if (deltap == ExtInt(2)) {
    // reg(M'/H^0(M')) = max{a_1(M') + 1, a_2(M') + 2}; bound each row.
    ExtInt rhs = emax2(rhs_row(1) + ExtInt(1), rhs_row(2) + ExtInt(2));
    rep.add_relation(
        "reg(M'/H^0(M')) <= max_t{a_{1+t}(M) + d_1+..+d_t} + 1 (dim M' = 2)",
        Ap.reg1(), "<=", rhs);
    long long k = std::min(dl - 1, s);
    ExtInt slack = ExtInt(dsum[static_cast<size_t>(std::max(0LL, k))] -
                          std::max(0LL, k));
    rep.add_relation(
        "reg(M'/H^0(M')) <= reg(M/H^0(M)) + sum(d_i - 1) (dim M' = 2)",
        Ap.reg1(), "<=", A.reg1() + slack);
  }
  rep.finalize(false);
  return rep;
}

// ---------------------------------------------------------------------------
// nonacyclic: degree bounds for homology of a non-acyclic complex
// ---------------------------------------------------------------------------

TheoremReport check_nonacyclic(const ChainComplex& F, const GradedModule& M) {
  if (!same_ring(F.ring(), M.ring()))
    throw std::invalid_argument(
        "check_nonacyclic: complex and module must share one ring");

  TheoremReport rep;
  rep.theorem = "nonacyclic";
  rep.input = "free complex of length " + std::to_string(F.length()) +
              " (x) " + module_desc(M);

  const int L = F.length();
  std::vector<Subquotient> H;
  H.reserve(static_cast<size_t>(L) + 1);
  for (int i = 0; i <= L; ++i)
    H.push_back(homology_with_coefficients(F, M, i));

  long long tau = 0;
  bool cd_le_1 = true;
  std::string cds;
  for (int i = 1; i <= L; ++i) {
    if (H[static_cast<size_t>(i)].is_zero()) continue;
    long long cdi = H[static_cast<size_t>(i)].dim().value();
    tau = std::max(tau, cdi - i + 1);
    if (cdi > 1) cd_le_1 = false;
    if (!cds.empty()) cds += ", ";
    cds += "cd H_" + std::to_string(i) + " = " + std::to_string(cdi);
  }
  rep.add_hypothesis(
      "D_1(tau)", HypStatus::verified,
      "tau = " + std::to_string(tau) +
          (cds.empty() ? "; all higher homology vanishes" : "; " + cds));

  ComplexBounds cb = complex_bounds_tensor(F, M);
  auto delta_at = [&](long long p) {
    return (0 <= p && p < static_cast<long long>(cb.delta.size()))
               ? cb.delta[static_cast<size_t>(p)]
               : ExtInt::neg_inf();
  };
  auto eps_at = [&](long long q) {
    return (0 <= q && q < static_cast<long long>(cb.epsilon.size()))
               ? cb.epsilon[static_cast<size_t>(q)]
               : ExtInt::neg_inf();
  };

  AInvariants A0 = a_invariants(H[0].to_module());
  const long long n = M.ring()->nvars();
  for (long long p = std::max(0LL, tau - 1); p <= n; ++p)
    rep.add_relation(at_index("a_p(H_0) <= delta_p", "p", p),
                     A0.a_at(static_cast<int>(p)), "<=", delta_at(p));

  if (cd_le_1) {
    rep.add_hypothesis("cd H_i <= 1 for i >= 1", HypStatus::verified, "");
    for (int q = 1; q <= L; ++q) {
      if (H[static_cast<size_t>(q)].is_zero()) continue;
      AInvariants Aq = a_invariants(H[static_cast<size_t>(q)].to_module());
      rep.add_relation(at_index("a_0(H_q) <= epsilon_q", "q", q), Aq.a_at(0),
                       "<=", eps_at(q));
      rep.add_relation(at_index("a_1(H_q) <= epsilon_{q-1}", "q", q),
                       Aq.a_at(1), "<=", eps_at(q - 1));
    }
  } else {
    rep.note =
        "higher homology of dimension > 1 present; only the delta bounds for "
        "p >= tau - 1 apply";
  }
  rep.finalize(false);
  return rep;
}

// ---------------------------------------------------------------------------
// betti_transfer: Betti numbers and regularity along R -> S
// ---------------------------------------------------------------------------

TheoremReport check_betti_transfer(const GradedModule& M, int i_max, int cap) {
  if (i_max < 0) throw std::invalid_argument("i_max must be nonnegative");

  TheoremReport rep;
  rep.theorem = "betti_transfer";
  rep.input = module_desc(M);
  const RingPtr& S = M.ring();

  if (M.is_zero()) {
    rep.note = "the module is zero; all transfer bounds are trivial";
    rep.finalize(false);
    return rep;
  }
  rep.add_hypothesis("finite degree-zero map R -> S", HypStatus::verified,
                     S->is_polynomial_ring() ? "identity map"
                                             : "quotient projection");

  GradedModule Mr = restrict_to_ambient(M);
  BettiTable betR = Mr.betti();
  const Resolution& res = M.resolution(cap);
  BettiTable betS = M.betti(cap);
  int avail = res.truncated ? std::min(i_max, res.length()) : i_max;
  bool data_truncated = res.truncated && res.length() < i_max;

  BettiTable betRS;
  if (S->is_polynomial_ring()) {
    std::map<std::pair<int, int>, long long> one;
    one[{0, 0}] = 1;
    betRS = BettiTable(one);
  } else {
    betRS = ring_as_ambient_module(S).betti();
  }

  // E_p: maxima of Betti-degree sums over compositions of p into parts >= 2.
  std::vector<ExtInt> g(static_cast<size_t>(std::max(i_max + 1, 2)),
                        ExtInt::neg_inf());
  g[0] = ExtInt(0);
  for (int r = 2; r <= i_max; ++r)
    for (int jj = 2; jj <= r; ++jj)
      g[static_cast<size_t>(r)] =
          emax2(g[static_cast<size_t>(r)],
                betRS.b(jj - 1) + g[static_cast<size_t>(r - jj)]);
  auto E_at = [&](int p) {
    return p <= 1 ? ExtInt(0) : g[static_cast<size_t>(p)];
  };

  for (int i = 0; i <= avail; ++i) {
    std::string sfx = ", i=" + std::to_string(i);
    ExtInt bis = betS.b(i);

    ExtInt r1 = ExtInt::neg_inf();
    for (int p = 0; p <= i; ++p) r1 = emax2(r1, betR.b(i - p) + E_at(p));
    rep.add_relation("b_i^S(M) <= max_p{b_{i-p}^R(M) + E_p}" + sfx, bis, "<=",
                     r1);

    ExtInt r2 = ExtInt::neg_inf();
    for (int p = 0; p <= i; ++p) {
      ExtInt bR = betR.b(i - p);
      if (!bR.is_finite()) continue;
      ExtInt inner(0);
      for (int ell = 1; ell <= p / 2; ++ell) {
        ExtInt rs = betRS.reg_upto(p - 2 * ell + 1);
        inner = emax2(inner, ExtInt(static_cast<long long>(ell) *
                                    (rs.value() - 1)));
      }
      r2 = emax2(r2, ExtInt(bR.value() + p) + inner);
    }
    rep.add_relation(
        "b_i^S(M) <= max_p{b_{i-p}^R(M) + p + max_l{l (reg_{p-2l+1}^R(S) - "
        "1)}}" +
            sfx,
        bis, "<=", r2);

    ExtInt r3 = ExtInt::neg_inf();
    for (int p = 0; p <= i; ++p) {
      ExtInt rm = betR.reg_upto(i - p);
      if (!rm.is_finite()) continue;
      long long c = p / 2;
      long long corr = 0;
      if (c > 0)
        corr = c * std::max(0LL, betRS.reg_upto(p - 1).value() - 1);
      r3 = emax2(r3, ExtInt(rm.value() + corr));
    }
    rep.add_relation(
        "b_i^S(M) - i <= max_p{reg_{i-p}^R(M) + floor(p/2) max{0, "
        "reg_{p-1}^R(S) - 1}}" +
            sfx,
        bis + ExtInt(-static_cast<long long>(i)), "<=", r3);

    ExtInt riS = betS.reg_upto(i);
    ExtInt riR = betR.reg_upto(i);
    ExtInt diff = ExtInt(riS.value() - riR.value());
    rep.add_relation("-reg_i^R(S) <= reg_i^S(M) - reg_i^R(M)" + sfx,
                     ExtInt(-betRS.reg_upto(i).value()), "<=", diff);
    long long c2 = i / 2;
    long long up = 0;
    if (c2 > 0)
      up = std::max(0LL, c2 * (betRS.reg_upto(i - 1).value() - 1));
    rep.add_relation(
        "reg_i^S(M) - reg_i^R(M) <= max{0, floor(i/2)(reg_{i-1}^R(S) - 1)}" +
            sfx,
        diff, "<=", ExtInt(up));
  }

  if (betRS.reg() == ExtInt(1)) {
    rep.add_hypothesis("reg_R(S) = 1", HypStatus::verified,
                       "defining ideal resolved linearly after the quadrics");
    ExtInt regM = betR.reg();
    for (int i = 0; i <= avail; ++i) {
      std::string sfx = ", i=" + std::to_string(i);
      ExtInt riS = betS.reg_upto(i);
      ExtInt riR = betR.reg_upto(i);
      rep.add_relation("reg_i^R(M) - 1 <= reg_i^S(M)" + sfx,
                       riR + ExtInt(-1), "<=", riS);
      rep.add_relation("reg_i^S(M) <= reg_i^R(M)" + sfx, riS, "<=", riR);
      rep.add_relation("b_i^S(M) <= reg(M) + i" + sfx, betS.b(i), "<=",
                       regM + ExtInt(i));
    }
  }
  rep.finalize(data_truncated);
  return rep;
}

// ---------------------------------------------------------------------------
// intersect: regularity of a proper-intersection locus
// ---------------------------------------------------------------------------

TheoremReport check_intersection_bound(const std::vector<Ideal>& ideals,
                                       IntersectionAssertions assertions) {
  if (ideals.size() < 2)
    throw std::invalid_argument(
        "check_intersection_bound requires Z_0 and at least one more "
        "subscheme");
  const RingPtr& S = ideals.front().ring();
  for (const auto& I : ideals)
    if (!same_ring(I.ring(), S))
      throw std::invalid_argument(
          "check_intersection_bound: ideals must share one ring");

  if (ring_dim(S) < 0)
    throw std::invalid_argument(
        "check_intersection_bound: the ambient coordinate ring is zero");

  const int s = static_cast<int>(ideals.size()) - 1;
  TheoremReport rep;
  rep.theorem = "intersect";
  rep.input = std::to_string(s + 1) + " subschemes of Proj(" +
              S->description() + ")";
  const RingPtr& R = S->ambient_or_self();

  std::vector<AInvariants> Av;
  Av.reserve(ideals.size());
  for (const auto& I : ideals)
    Av.push_back(a_invariants(GradedModule::cyclic(I)));

  // Z_0 stays first; Z_1..Z_s sorted by scheme regularity, descending.
  std::vector<int> order(static_cast<size_t>(s));
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return Av[static_cast<size_t>(b)].reg1() <
           Av[static_cast<size_t>(a)].reg1();
  });
  {
    std::string ord;
    for (int i : order) {
      if (!ord.empty()) ord += ", ";
      ord += "Z_" + std::to_string(i);
    }
    rep.add_hypothesis("reg(Z_1) >= ... >= reg(Z_s)", HypStatus::verified,
                       "inputs sorted internally: " + ord);
  }

  ExtInt regS1 = ring_scheme_reg(S);
  const long long rprime = std::max(0LL, regS1.value() - 1);
  ExtInt kd0 = krull_dim(ideals.front());
  const long long dz0 = kd0.is_finite() ? kd0.value() - 1 : -1;
  const long long e = std::min<long long>(s, dz0);

  {
    bool ok = true;
    for (long long i = 1; i <= e; ++i) {
      ExtInt rz = Av[static_cast<size_t>(order[static_cast<size_t>(i - 1)])]
                      .reg1();
      if (rz < ExtInt(regS1.value() - 1)) ok = false;
    }
    rep.add_hypothesis("reg(Z_i) >= reg(S) - 1 for i <= min(s, dim Z_0)",
                       ok ? HypStatus::verified : HypStatus::failed, "");
  }

  // Properness (global check; assertable off a small locus).
  const long long dimS = ring_dim(S);
  Ideal total = ideals.front();
  for (int i = 1; i <= s; ++i)
    total = ideal_sum(total, ideals[static_cast<size_t>(i)]);
  {
    long long codim_sum = 0;
    bool finite = true;
    for (const auto& I : ideals) {
      ExtInt kd = krull_dim(I);
      if (!kd.is_finite()) {
        finite = false;
        break;
      }
      codim_sum += dimS - kd.value();
    }
    ExtInt kdz = krull_dim(total);
    bool proper =
        finite && (kdz.is_finite() ? kdz.value() == dimS - codim_sum
                                   : dimS - codim_sum <= 0);
    if (proper) {
      rep.add_hypothesis("proper intersection off a small locus",
                         HypStatus::verified,
                         "codimensions add globally");
    } else if (assertions.proper) {
      rep.add_hypothesis("proper intersection off a small locus",
                         HypStatus::asserted,
                         "not proper globally; caller vouches off a locus of "
                         "dimension <= 1");
    } else {
      rep.add_hypothesis("proper intersection off a small locus",
                         HypStatus::failed, "codimensions do not add");
    }
  }

  // Cohen-Macaulayness (global check; assertable off a small locus).
  {
    bool all_cm = true;
    for (const auto& A : Av) all_cm = all_cm && A.cohen_macaulay();
    if (all_cm) {
      rep.add_hypothesis("each Z_i Cohen-Macaulay off a small locus",
                         HypStatus::verified, "graded Cohen-Macaulay");
    } else if (assertions.local_cm) {
      rep.add_hypothesis("each Z_i Cohen-Macaulay off a small locus",
                         HypStatus::asserted,
                         "not Cohen-Macaulay globally; caller vouches off a "
                         "locus of dimension <= 1");
    } else {
      rep.add_hypothesis("each Z_i Cohen-Macaulay off a small locus",
                         HypStatus::failed,
                         "a coordinate ring is not Cohen-Macaulay");
    }
  }

  // Regularity of S along the intersection (Jacobian criterion).
  if (S->is_polynomial_ring()) {
    rep.add_hypothesis("S regular along Z off a small locus",
                       HypStatus::verified, "polynomial ring is regular");
  } else {
    try {
      bool caveat = false;
      Ideal sing = singular_locus_ideal(S, false, &caveat);
      std::vector<Polynomial> cg = sing.gens();
      for (const auto& f : total.gens()) cg.push_back(S->lift(f));
      ExtInt sd = krull_dim(Ideal(R, cg));
      bool ok = !(ExtInt(2) < sd);  // projective dimension <= 1
      if (ok && !caveat) {
        rep.add_hypothesis("S regular along Z off a small locus",
                           HypStatus::verified,
                           "Sing(S) meets Z in cone dimension " + sd.str());
      } else if (assertions.small_singular_intersection) {
        rep.add_hypothesis("S regular along Z off a small locus",
                           HypStatus::asserted,
                           "caller vouches for the singular locus");
      } else if (!ok) {
        rep.add_hypothesis("S regular along Z off a small locus",
                           HypStatus::failed,
                           "Sing(S) meets Z in cone dimension " + sd.str());
      } else {
        rep.add_hypothesis("S regular along Z off a small locus",
                           HypStatus::asserted,
                           "Jacobian locus small, but the criterion is not "
                           "reliable in this characteristic");
      }
    } catch (const std::invalid_argument& ex) {
      if (assertions.small_singular_intersection) {
        rep.add_hypothesis("S regular along Z off a small locus",
                           HypStatus::asserted,
                           "Jacobian criterion unavailable; caller vouches");
      } else {
        rep.add_hypothesis("S regular along Z off a small locus",
                           HypStatus::failed, ex.what());
      }
    }
  }

  ExtInt bound = Av.front().reg1();
  for (long long i = 1; i <= e; ++i)
    bound = bound +
            emax2(Av[static_cast<size_t>(order[static_cast<size_t>(i - 1)])]
                      .reg1(),
                  ExtInt(rprime));
  bound = bound + ExtInt(floordiv(dz0 - 1, 2) * rprime);

  ExtInt lhs = a_invariants(GradedModule::cyclic(total)).reg1();
  rep.add_relation(
      "reg(Z) <= reg(Z_0) + sum_{i<=min(s,dim Z_0)} max{reg(Z_i), reg(S)-1} + "
      "floor((dim Z_0 - 1)/2) max{reg(S)-1, 0}",
      lhs, "<=", bound);
  rep.finalize(false);
  return rep;
}

// ---------------------------------------------------------------------------
// kahler: degree bounds for differentials of a dimension-3 algebra
// ---------------------------------------------------------------------------

TheoremReport check_kahler_bounds(const RingPtr& B, KahlerAssertions assertions) {
  TheoremReport rep;
  rep.theorem = "kahler";
  rep.input = B->description();
  const RingPtr& R = B->ambient_or_self();

  const long long dimB = ring_dim(B);
  bool dim_ok = dimB == 3;
  rep.add_hypothesis("dim B = 3", dim_ok ? HypStatus::verified : HypStatus::failed,
                     "dim = " + std::to_string(dimB));
  if (!dim_ok) {
    rep.finalize(false);
    return rep;
  }

  Ideal J = B->is_polynomial_ring() ? Ideal::zero(R) : modulus_ideal(B);
  if (is_monomial_ideal(J)) {
    bool gci = monomial_generic_ci(J);
    rep.add_hypothesis("generically a complete intersection",
                       gci ? HypStatus::verified : HypStatus::failed,
                       "decided on the monomial support");
    if (!gci) {
      rep.finalize(false);
      return rep;
    }
  } else if (assertions.generically_ci) {
    rep.add_hypothesis("generically a complete intersection",
                       HypStatus::asserted,
                       "not machine-verified for non-monomial input");
  } else {
    rep.add_hypothesis("generically a complete intersection", HypStatus::failed,
                       "cannot verify for non-monomial input; pass the "
                       "assertion to proceed");
    rep.finalize(false);
    return rep;
  }

  AInvariants aB = ring_a_invariants(B);
  GradedModule MJ = ideal_as_module(J);
  BettiTable bj = MJ.betti();
  ExtInt b0 = bj.b(0);
  ExtInt b1 = bj.b(1);
  ExtInt b2 = bj.b(2);
  std::vector<long long> degs = min_gen_degrees_desc(bj);
  ExtInt dd =
      degs.size() >= 2 ? ExtInt(degs[0] + degs[1]) : ExtInt::neg_inf();

  KahlerModule K = kahler_module(B);
  AInvariants aO = a_invariants(K.omega);

  rep.add_relation("a_3(Omega) <= a_3(B) + 1", aO.a_at(3), "<=",
                   aB.a_at(3) + ExtInt(1));
  rep.add_relation("a_2(Omega) <= max{a_2(B)+1, a_3(B)+b_0}", aO.a_at(2), "<=",
                   emax2(aB.a_at(2) + ExtInt(1), aB.a_at(3) + b0));
  if (assertions.generically_reduced) {
    rep.add_hypothesis("generically reduced", HypStatus::asserted,
                       "not machine-verified");
    rep.add_relation(
        "a_1(Omega) <= max{a_1(B)+1, a_2(B)+b_0, a_3(B)+b_1}", aO.a_at(1),
        "<=",
        emax3(aB.a_at(1) + ExtInt(1), aB.a_at(2) + b0, aB.a_at(3) + b1));
  }
  if (assertions.reduced_ci_off_points) {
    rep.add_hypothesis("reduced complete intersection off finitely many points",
                       HypStatus::asserted, "not machine-verified");
    ExtInt rhs = emax3(aB.a_at(0) + ExtInt(1), aB.a_at(1) + b0,
                       aB.a_at(2) + b1);
    rhs = emax3(rhs, aB.a_at(3) + b2, aB.a_at(3) + dd);
    rep.add_relation(
        "a_0(Omega) <= max{a_0(B)+1, a_1(B)+b_0, a_2(B)+b_1, a_3(B)+b_2, "
        "a_3(B)+d_1+d_2}",
        aO.a_at(0), "<=", rhs);
  }
  rep.finalize(false);
  return rep;
}

}  // namespace regalia
