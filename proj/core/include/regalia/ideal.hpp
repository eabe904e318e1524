#pragma once

#include "regalia/free_module.hpp"
#include "regalia/groebner.hpp"
#include "regalia/polynomial.hpp"
#include "regalia/ring.hpp"

#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace regalia {

/// A homogeneous ideal of a graded ring, held by its generator list with a
/// lazily computed reduced Groebner basis.  Over a quotient ring S = R/J the
/// cached basis is the reduced basis of lift(I) + J over the ambient
/// polynomial ring, which is the right object for membership, Hilbert counts
/// and initial ideals.  Values are copyable; copies share the cache.
class Ideal {
 public:
  /// Generators must be homogeneous elements of the ring; zeros are dropped.
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);
  /// The irrelevant ideal (x0..x{n-1}).
  static Ideal irrelevant(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }

  /// Reduced Groebner basis of lift(I) + J over the ambient polynomial ring.
  /// Computed once; safe to call concurrently.
  const std::vector<Polynomial>& ambient_groebner() const;

  bool contains(const Polynomial& f) const;
  /// Normal form of f modulo the ideal (canonical coset representative).
  Polynomial reduce(const Polynomial& f) const;
  bool is_zero_ideal() const;
  bool is_unit_ideal() const;
  /// Largest generator degree, -inf for the zero ideal.
  ExtInt max_gen_degree() const;

  /// Equality as ideals (same ring, same reduced basis).
  friend bool ideal_equal(const Ideal& a, const Ideal& b);

  std::string str() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  struct Cache {
    std::mutex mu;
    bool ready = false;
    std::vector<Polynomial> gb;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// The 1 x s presentation row of the generators (target = ring, source
/// twists = generator degrees).  coker(row) = ring/I.
GradedMatrix generator_row(const Ideal& I);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
/// I^m; m = 0 gives the unit ideal.  Throws on m < 0.
Ideal ideal_power(const Ideal& I, int m);
/// Ideal of q-th powers of the given generators; requires char p > 0 and
/// q a power of p.
Ideal bracket_power(const Ideal& I, long long q);
/// (I : f) = {g : g*f in I}.
Ideal ideal_quotient(const Ideal& I, const Polynomial& f);
/// (I : J) as an ideal quotient.
Ideal ideal_quotient(const Ideal& I, const Ideal& J);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
/// One colon step (I : S_+) against the irrelevant ideal.
Ideal irrelevant_quotient(const Ideal& I);
/// Saturation (I : S_+^inf), computed as a stabilized iterated quotient.
Ideal saturation(const Ideal& I);

}  // namespace regalia
