#include "regalia/ring.hpp"

#include "regalia/groebner.hpp"

#include <stdexcept>

namespace regalia {

Ring::Ring(CoefficientField field, int nvars) : field_(field), nvars_(nvars) {
  if (nvars < 0) throw std::invalid_argument("Ring: negative variable count");
  var_names_.reserve(nvars);
  for (int v = 0; v < nvars; ++v) var_names_.push_back("x" + std::to_string(v));
}

RingPtr Ring::polynomial_ring(CoefficientField field, int nvars) {
  return RingPtr(new Ring(field, nvars));
}

RingPtr Ring::quotient_ring(RingPtr ambient, std::vector<Polynomial> j_gens) {
  if (!ambient) throw std::invalid_argument("Ring: null ambient ring");
  if (!ambient->is_polynomial_ring())
    throw std::invalid_argument("Ring: quotient ambient must be a polynomial ring");
  for (const auto& g : j_gens) {
    if (!same_ring(g.ring(), ambient))
      throw std::invalid_argument("Ring: quotient generator over wrong ring");
    if (!g.is_homogeneous())
      throw std::invalid_argument("Ring: quotient generator must be homogeneous");
    if (g.is_unit_constant())
      throw std::invalid_argument("Ring: quotient by the unit ideal");
  }
  auto* raw = new Ring(ambient->field(), ambient->nvars());
  raw->ambient_ = ambient;
  raw->modulus_gens_ = j_gens;
  raw->modulus_gb_ = poly_groebner(ambient, j_gens);
  return RingPtr(raw);
}

RingPtr Ring::ambient_or_self() const {
  if (ambient_) return ambient_;
  return shared_from_this();
}

Polynomial Ring::reduce_ambient(const Polynomial& f) const {
  if (is_polynomial_ring()) return f;
  if (!same_ring(f.ring(), ambient_))
    throw std::invalid_argument("Ring: reduce_ambient expects an ambient polynomial");
  return poly_normal_form(f, modulus_gb_);
}

Polynomial Ring::project(const Polynomial& ambient_poly) const {
  if (is_polynomial_ring()) {
    if (!same_ring(ambient_poly.ring(), shared_from_this()))
      throw std::invalid_argument("Ring: project expects a polynomial over this ring");
    return ambient_poly;
  }
  Polynomial red = reduce_ambient(ambient_poly);
  return Polynomial::from_terms(shared_from_this(), red.terms());
}

Polynomial Ring::lift(const Polynomial& f) const {
  if (!same_ring(f.ring(), shared_from_this()))
    throw std::invalid_argument("Ring: lift expects an element of this ring");
  if (is_polynomial_ring()) return f;
  return Polynomial::from_terms(ambient_, f.terms());
}

std::string Ring::description() const {
  std::string base = field_.name() + "[";
  for (int v = 0; v < nvars_; ++v) base += (v ? "," : "") + var_names_[v];
  base += "]";
  if (is_polynomial_ring()) return base;
  std::string mod = "(";
  for (size_t i = 0; i < modulus_gens_.size(); ++i)
    mod += (i ? ", " : "") + modulus_gens_[i].str();
  mod += ")";
  return base + "/" + mod;
}

}  // namespace regalia
