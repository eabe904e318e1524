#include "regalia/ainvariants.hpp"

#include "regalia/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace regalia {

ExtInt AInvariants::a_at(int i) const {
  if (i < 0 || i >= static_cast<int>(a.size())) return ExtInt::neg_inf();
  return a[i];
}

ExtInt AInvariants::reg() const {
  ExtInt r = ExtInt::neg_inf();
  for (int i = 0; i < static_cast<int>(a.size()); ++i) r = max(r, a[i] + ExtInt(i));
  return r;
}

ExtInt AInvariants::reg1() const {
  ExtInt r = ExtInt::neg_inf();
  for (int i = 1; i < static_cast<int>(a.size()); ++i) r = max(r, a[i] + ExtInt(i));
  return r;
}

ExtInt AInvariants::cd() const {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (!a[i].is_neg_inf()) return ExtInt(i);
  return ExtInt::neg_inf();
}

ExtInt AInvariants::depth() const {
  for (int i = 0; i < static_cast<int>(a.size()); ++i)
    if (!a[i].is_neg_inf()) return ExtInt(i);
  return ExtInt::pos_inf();
}

bool AInvariants::cohen_macaulay() const {
  int nonvanishing = 0;
  for (const ExtInt& v : a)
    if (!v.is_neg_inf()) ++nonvanishing;
  return nonvanishing <= 1;
}

AInvariants a_invariants(const GradedModule& M) {
  GradedModule amb = restrict_to_ambient(M);
  const RingPtr& R = amb.ring();
  int n = R->nvars();
  std::vector<Subquotient> ext = ext_modules(amb, n);
  AInvariants out;
  out.a.assign(n + 1, ExtInt::neg_inf());
  for (int i = 0; i <= n; ++i) {
    int k = n - i;  // Ext index dual to cohomological index i
    if (k < static_cast<int>(ext.size())) out.a[i] = -ext[k].indeg();
  }
  return out;
}

namespace {

ExtInt betti_route(const GradedModule& M) {
  const RingPtr& ring = M.ring();
  if (ring->is_polynomial_ring()) return M.betti().reg();
  // Quotient ring: reg^S(M) + reg(S), needing finite projective dimension
  // over S.
  const Resolution& res = M.resolution();
  if (res.truncated)
    throw RouteUnavailable(
        "regularity: betti route needs a finite resolution over the quotient ring");
  ExtInt reg_s_of_m = betti_from_complex(res.complex).reg();
  GradedModule s_over_ambient =
      GradedModule::cyclic(Ideal(ring->ambient(), ring->modulus_gens()));
  ExtInt reg_of_s = s_over_ambient.betti().reg();
  return reg_s_of_m + reg_of_s;
}

}  // namespace

ExtInt regularity(const GradedModule& M, RegRoute route) {
  if (M.ring()->is_polynomial_ring()) {
    ExtInt via_duality = a_invariants(M).reg();
    ExtInt via_betti = M.betti().reg();
    if (via_duality != via_betti)
      throw std::logic_error("regularity: duality route " + via_duality.str() +
                             " disagrees with betti route " + via_betti.str());
    return route == RegRoute::duality ? via_duality : via_betti;
  }
  if (route == RegRoute::duality) return a_invariants(M).reg();
  return betti_route(M);
}

ComplexBounds complex_bounds(const std::vector<AInvariants>& terms) {
  ComplexBounds out;
  int len = static_cast<int>(terms.size());
  if (len == 0) return out;
  int top = 0;
  for (const auto& t : terms) top = std::max(top, static_cast<int>(t.a.size()) - 1);
  out.delta.assign(top + 1, ExtInt::neg_inf());
  out.epsilon.assign(len, ExtInt::neg_inf());
  for (int p = 0; p <= top; ++p)
    for (int i = 0; i < len; ++i)
      out.delta[p] = max(out.delta[p], terms[i].a_at(p + i));
  for (int q = 0; q < len; ++q)
    for (int i = 0; q + i < len; ++i)
      out.epsilon[q] = max(out.epsilon[q], terms[q + i].a_at(i));
  return out;
}

ComplexBounds complex_bounds_tensor(const ChainComplex& F, const GradedModule& M) {
  bool all_zero = true;
  for (int i = 0; i <= F.length(); ++i)
    if (F.module(i).rank() > 0) all_zero = false;
  if (all_zero) return ComplexBounds{};

  AInvariants base = a_invariants(M);
  std::vector<AInvariants> terms;
  for (int i = 0; i <= F.length(); ++i) {
    ExtInt b = F.max_twist(i);
    AInvariants shifted;
    shifted.a.reserve(base.a.size());
    for (const ExtInt& v : base.a) shifted.a.push_back(v + b);
    terms.push_back(std::move(shifted));
  }
  return complex_bounds(terms);
}

}  // namespace regalia
