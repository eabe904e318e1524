#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace regalia {

/// A monomial in a fixed number of variables: an exponent vector.
/// Comparison is degree-reverse-lexicographic (grevlex), the engine-wide
/// term order.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
    for (int x : e_)
      if (x < 0) throw std::domain_error("Monomial: negative exponent");
  }
  static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }
  static Monomial variable(int nvars, int v, int power = 1) {
    std::vector<int> e(nvars, 0);
    e.at(v) = power;
    return Monomial(std::move(e));
  }

  int nvars() const { return static_cast<int>(e_.size()); }
  int exponent(int v) const { return e_[v]; }
  const std::vector<int>& exponents() const { return e_; }
  int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
  bool is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (int i = 0; i < r.nvars(); ++i) r.e_[i] += b.e_[i];
    return r;
  }

  bool divides(const Monomial& m) const {
    for (int i = 0; i < nvars(); ++i)
      if (e_[i] > m.e_[i]) return false;
    return true;
  }

  /// Exact quotient m / this; requires divisibility.
  Monomial divide_into(const Monomial& m) const {
    Monomial r = m;
    for (int i = 0; i < nvars(); ++i) {
      r.e_[i] -= e_[i];
      if (r.e_[i] < 0) throw std::domain_error("Monomial: non-exact division");
    }
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (int i = 0; i < r.nvars(); ++i) r.e_[i] = std::max(r.e_[i], b.e_[i]);
    return r;
  }
  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (int i = 0; i < r.nvars(); ++i) r.e_[i] = std::min(r.e_[i], b.e_[i]);
    return r;
  }
  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.nvars(); ++i)
      if (a.e_[i] > 0 && b.e_[i] > 0) return false;
    return true;
  }

  Monomial pow(int k) const {
    Monomial r = *this;
    for (int i = 0; i < r.nvars(); ++i) r.e_[i] *= k;
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  /// grevlex: compare total degree first; on ties the monomial with the
  /// smaller exponent on the last variable where they differ is larger.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (int i = a.nvars() - 1; i >= 0; --i)
      if (a.e_[i] != b.e_[i]) return a.e_[i] > b.e_[i];
    return false;
  }
  friend bool operator>(const Monomial& a, const Monomial& b) { return b < a; }
  friend bool operator<=(const Monomial& a, const Monomial& b) { return !(b < a); }
  friend bool operator>=(const Monomial& a, const Monomial& b) { return !(a < b); }

 private:
  std::vector<int> e_;
};

}  // namespace regalia
