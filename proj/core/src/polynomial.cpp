#include "regalia/polynomial.hpp"

#include "regalia/ring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace regalia {

namespace {

// Sort descending, merge equal monomials, drop zero coefficients.
std::vector<Term> normalize_terms(const CoefficientField& k, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return b.mono < a.mono; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono)
      out.back().coeff = k.add(out.back().coeff, t.coeff);
    else
      out.push_back(std::move(t));
    if (!out.empty() && k.is_zero(out.back().coeff)) out.pop_back();
  }
  return out;
}

}  // namespace

Polynomial Polynomial::zero(RingPtr ring) { return Polynomial(std::move(ring), {}); }

Polynomial Polynomial::constant(RingPtr ring, long long c) {
  const auto& k = ring->field();
  Scalar s = k.from_int(c);
  if (k.is_zero(s)) return zero(std::move(ring));
  int n = ring->nvars();
  return Polynomial(std::move(ring), {Term{s, Monomial::one(n)}});
}

Polynomial Polynomial::variable(RingPtr ring, int v) {
  int n = ring->nvars();
  if (v < 0 || v >= n) throw std::out_of_range("Polynomial: variable index");
  std::vector<Term> t{Term{ring->field().one(), Monomial::variable(n, v)}};
  return from_terms(std::move(ring), std::move(t));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.mono.nvars() != ring->nvars())
      throw std::invalid_argument("Polynomial: monomial over wrong number of variables");
  auto norm = normalize_terms(ring->field(), std::move(terms));
  Polynomial f(ring, std::move(norm));
  if (!ring->is_polynomial_ring()) {
    // Keep the canonical representative mod J.
    Polynomial amb(ring->ambient(), f.terms_);
    Polynomial red = ring->reduce_ambient(amb);
    f.terms_ = red.terms();
  }
  return f;
}

bool Polynomial::is_unit_constant() const {
  return terms_.size() == 1 && terms_[0].mono.is_one();
}

ExtInt Polynomial::degree() const {
  if (terms_.empty()) return ExtInt::neg_inf();
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return ExtInt(d);
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().mono.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return t.mono.degree() == d; });
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::logic_error("Polynomial: leading term of zero");
  return terms_.front();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_))
    throw std::invalid_argument("Polynomial: mixed rings in +");
  std::vector<Term> t = a.terms_;
  t.insert(t.end(), b.terms_.begin(), b.terms_.end());
  return Polynomial::from_terms(a.ring_, std::move(t));
}

Polynomial operator-(const Polynomial& a) { return a.scaled(a.ring_->field().from_int(-1)); }

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_))
    throw std::invalid_argument("Polynomial: mixed rings in *");
  const auto& k = a.ring_->field();
  std::vector<Term> t;
  t.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_)
      t.push_back(Term{k.mul(ta.coeff, tb.coeff), ta.mono * tb.mono});
  return Polynomial::from_terms(a.ring_, std::move(t));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  const auto& k = a.ring_->field();
  for (size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono ||
        !k.equal(a.terms_[i].coeff, b.terms_[i].coeff))
      return false;
  return true;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  const auto& k = ring_->field();
  if (k.is_zero(c)) return zero(ring_);
  std::vector<Term> t = terms_;
  for (auto& x : t) x.coeff = k.mul(x.coeff, c);
  // Scaling keeps order and (over quotient rings) normal form.
  return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
  return times_term(ring_->field().one(), m);
}

Polynomial Polynomial::times_term(const Scalar& c, const Monomial& m) const {
  const auto& k = ring_->field();
  if (k.is_zero(c)) return zero(ring_);
  std::vector<Term> t = terms_;
  for (auto& x : t) {
    x.coeff = k.mul(x.coeff, c);
    x.mono = x.mono * m;
  }
  return from_terms(ring_, std::move(t));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(leading_coeff()));
}

Polynomial Polynomial::pow(int n) const {
  if (n < 0) throw std::domain_error("Polynomial: negative power");
  Polynomial r = constant(ring_, 1);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1) r = r * base;
    base = (n >>= 1) ? base * base : base;
  }
  return r;
}

Polynomial Polynomial::frobenius_pow(long long q) const {
  long long p = ring_->field().characteristic();
  if (p == 0) throw std::domain_error("Polynomial: Frobenius power needs characteristic p > 0");
  long long check = q;
  while (check > 1 && check % p == 0) check /= p;
  if (check != 1) throw std::domain_error("Polynomial: q must be a power of the characteristic");
  const auto& k = ring_->field();
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& x : terms_) {
    Scalar c = k.one();
    long long e = q;
    Scalar base = x.coeff;
    while (e > 0) {  // c = coeff^q
      if (e & 1) c = k.mul(c, base);
      e >>= 1;
      if (e) base = k.mul(base, base);
    }
    t.push_back(Term{c, x.mono.pow(static_cast<int>(q))});
  }
  return from_terms(ring_, std::move(t));
}

Polynomial Polynomial::derivative(int v) const {
  const auto& k = ring_->field();
  std::vector<Term> t;
  for (const auto& x : terms_) {
    int e = x.mono.exponent(v);
    if (e == 0) continue;
    std::vector<int> m = x.mono.exponents();
    m[v] -= 1;
    t.push_back(Term{k.mul(x.coeff, k.from_int(e)), Monomial(std::move(m))});
  }
  return from_terms(ring_, std::move(t));
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  const auto& k = ring_->field();
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    std::string c = k.str(t.coeff);
    bool negative = !c.empty() && c[0] == '-';
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    if (negative) c = c.substr(1);
    bool coeff_is_one = (c == "1");
    bool printed = false;
    if (!coeff_is_one || t.mono.is_one()) {
      out << c;
      printed = true;
    }
    for (int v = 0; v < t.mono.nvars(); ++v) {
      int e = t.mono.exponent(v);
      if (e == 0) continue;
      if (printed) out << "*";
      out << ring_->var_name(v);
      if (e > 1) out << "^" << e;
      printed = true;
    }
    first = false;
  }
  return out.str();
}

}  // namespace regalia
