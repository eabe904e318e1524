#include "regalia/ideal.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace regalia {

namespace {

// Append f to gens unless zero or already present.
void push_gen(std::vector<Polynomial>& gens, const Polynomial& f) {
  if (f.is_zero()) return;
  for (const auto& g : gens)
    if (g == f) return;
  gens.push_back(f);
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
  for (auto& g : gens) {
    if (!same_ring(g.ring(), ring_)) throw std::invalid_argument("Ideal: ring mismatch");
    if (!g.is_homogeneous()) throw std::invalid_argument("Ideal: inhomogeneous generator");
    push_gen(gens_, g);
  }
}

Ideal Ideal::unit(RingPtr ring) {
  Polynomial one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::irrelevant(RingPtr ring) {
  std::vector<Polynomial> vars;
  for (int v = 0; v < ring->nvars(); ++v) vars.push_back(Polynomial::variable(ring, v));
  return Ideal(std::move(ring), std::move(vars));
}

const std::vector<Polynomial>& Ideal::ambient_groebner() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->ready) {
    RingPtr amb = ring_->ambient_or_self();
    std::vector<Polynomial> lifted;
    for (const auto& g : gens_) lifted.push_back(ring_->lift(g));
    for (const auto& j : ring_->modulus_gens()) lifted.push_back(j);
    cache_->gb = poly_groebner(amb, lifted);
    cache_->ready = true;
  }
  return cache_->gb;
}

bool Ideal::contains(const Polynomial& f) const {
  if (!same_ring(f.ring(), ring_)) throw std::invalid_argument("Ideal::contains: ring mismatch");
  return poly_normal_form(ring_->lift(f), ambient_groebner()).is_zero();
}

Polynomial Ideal::reduce(const Polynomial& f) const {
  if (!same_ring(f.ring(), ring_)) throw std::invalid_argument("Ideal::reduce: ring mismatch");
  return ring_->project(poly_normal_form(ring_->lift(f), ambient_groebner()));
}

bool Ideal::is_zero_ideal() const { return gens_.empty(); }

bool Ideal::is_unit_ideal() const {
  const auto& gb = ambient_groebner();
  return !gb.empty() && gb.front().degree() == ExtInt(0);
}

ExtInt Ideal::max_gen_degree() const {
  ExtInt m = ExtInt::neg_inf();
  for (const auto& g : gens_) m = max(m, g.degree());
  return m;
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) return false;
  return a.ambient_groebner() == b.ambient_groebner();
}

std::string Ideal::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) os << ", ";
    os << gens_[i].str();
  }
  os << ")";
  return os.str();
}

GradedMatrix generator_row(const Ideal& I) {
  FreeModule target{I.ring(), {0}};
  std::vector<int> twists;
  for (const auto& g : I.gens()) twists.push_back(static_cast<int>(g.degree().value()));
  FreeModule source{I.ring(), twists};
  return GradedMatrix(target, source, {I.gens()});
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw std::invalid_argument("ideal_sum: ring mismatch");
  std::vector<Polynomial> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw std::invalid_argument("ideal_product: ring mismatch");
  std::vector<Polynomial> gens;
  for (const auto& f : a.gens())
    for (const auto& g : b.gens()) push_gen(gens, f * g);
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& I, int m) {
  if (m < 0) throw std::invalid_argument("ideal_power: negative exponent");
  if (m == 0) return Ideal::unit(I.ring());
  Ideal r = I;
  for (int i = 1; i < m; ++i) r = ideal_product(r, I);
  return r;
}

Ideal bracket_power(const Ideal& I, long long q) {
  long long p = I.ring()->field().characteristic();
  if (p == 0)
    throw std::domain_error("bracket_power: requires positive characteristic");
  long long t = q;
  while (t > 1 && t % p == 0) t /= p;
  if (t != 1) throw std::domain_error("bracket_power: exponent is not a power of the characteristic");
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens()) gens.push_back(g.frobenius_pow(q));
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_quotient(const Ideal& I, const Polynomial& f) {
  if (!same_ring(f.ring(), I.ring()))
    throw std::invalid_argument("ideal_quotient: ring mismatch");
  if (f.is_zero()) return Ideal::unit(I.ring());
  if (!f.is_homogeneous()) throw std::invalid_argument("ideal_quotient: inhomogeneous divisor");
  const RingPtr& ring = I.ring();
  std::vector<Polynomial> row = {f};
  std::vector<int> twists = {static_cast<int>(f.degree().value())};
  for (const auto& g : I.gens()) {
    row.push_back(g);
    twists.push_back(static_cast<int>(g.degree().value()));
  }
  GradedMatrix A(FreeModule{ring, {0}}, FreeModule{ring, twists}, {row});
  GradedMatrix Z = syzygy_matrix(A);
  std::vector<Polynomial> gens;
  for (int c = 0; c < Z.cols(); ++c) push_gen(gens, Z.entry(0, c));
  return Ideal(ring, std::move(gens));
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
  if (!same_ring(I.ring(), J.ring()))
    throw std::invalid_argument("ideal_quotient: ring mismatch");
  if (J.is_zero_ideal()) return Ideal::unit(I.ring());
  bool first = true;
  Ideal acc = Ideal::unit(I.ring());
  for (const auto& f : J.gens()) {
    Ideal q = ideal_quotient(I, f);
    acc = first ? q : ideal_intersection(acc, q);
    first = false;
  }
  return acc;
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring()))
    throw std::invalid_argument("ideal_intersection: ring mismatch");
  if (a.is_zero_ideal() || b.is_zero_ideal()) return Ideal::zero(a.ring());
  const RingPtr& ring = a.ring();
  Polynomial one = Polynomial::constant(ring, 1);
  Polynomial zero = Polynomial::zero(ring);
  FreeModule target{ring, {0, 0}};
  // Diagonal embedding: v in the intersection iff (v, v) lies in
  // im(gens(a)) (+) im(gens(b)).
  GradedMatrix diag(target, FreeModule{ring, {0}}, {{one}, {one}});
  std::vector<int> twists;
  std::vector<Polynomial> row0, row1;
  for (const auto& f : a.gens()) {
    twists.push_back(static_cast<int>(f.degree().value()));
    row0.push_back(f);
    row1.push_back(zero);
  }
  for (const auto& g : b.gens()) {
    twists.push_back(static_cast<int>(g.degree().value()));
    row0.push_back(zero);
    row1.push_back(g);
  }
  GradedMatrix B(target, FreeModule{ring, twists}, {row0, row1});
  GradedMatrix P = preimage_matrix(diag, B);
  std::vector<Polynomial> gens;
  for (int c = 0; c < P.cols(); ++c) push_gen(gens, P.entry(0, c));
  return Ideal(ring, std::move(gens));
}

Ideal irrelevant_quotient(const Ideal& I) {
  const RingPtr& ring = I.ring();
  int n = ring->nvars();
  if (I.is_unit_ideal()) return I;
  std::vector<int> tz(n, 0);
  FreeModule target{ring, tz};
  // Column of the variables: v maps to (v*x0, ..., v*x{n-1}).
  std::vector<std::vector<Polynomial>> var_col(n);
  for (int v = 0; v < n; ++v) var_col[v] = {Polynomial::variable(ring, v)};
  GradedMatrix A(target, FreeModule{ring, {1}}, var_col);
  // B embeds the generators of I into each component.
  std::vector<int> twists;
  std::vector<std::vector<Polynomial>> rows(n);
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < static_cast<int>(I.gens().size()) * n; ++i)
      rows[v].push_back(Polynomial::zero(ring));
  int col = 0;
  for (int v = 0; v < n; ++v)
    for (const auto& g : I.gens()) {
      twists.push_back(static_cast<int>(g.degree().value()));
      rows[v][col] = g;
      ++col;
    }
  GradedMatrix B(target, FreeModule{ring, twists}, rows);
  GradedMatrix P = preimage_matrix(A, B);
  std::vector<Polynomial> gens;
  for (int c = 0; c < P.cols(); ++c) push_gen(gens, P.entry(0, c));
  return Ideal(ring, std::move(gens));
}

Ideal saturation(const Ideal& I) {
  Ideal cur = I;
  for (;;) {
    Ideal next = irrelevant_quotient(cur);
    if (ideal_equal(next, cur)) return cur;
    cur = next;
  }
}

}  // namespace regalia
