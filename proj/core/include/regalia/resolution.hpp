#pragma once

#include "regalia/betti.hpp"
#include "regalia/complexes.hpp"
#include "regalia/free_module.hpp"

namespace regalia {

/// A minimal graded free resolution of coker(presentation).  Over a
/// polynomial ring the resolution always terminates; over a quotient ring
/// it may be cut short at the length cap, flagged by `truncated` (the
/// complex is then exact at 1..length-1 but F_length's kernel is unresolved).
struct Resolution {
  ChainComplex complex;
  bool truncated = false;

  int length() const { return complex.length(); }
};

/// Default cap for quotient-ring resolutions.
int default_resolution_cap(const RingPtr& ring);

/// Minimal free resolution of coker(presentation), by iterated syzygies with
/// whole-complex minimalization.  cap < 0 picks the default.
Resolution free_resolution(const GradedMatrix& presentation, int cap = -1);

}  // namespace regalia
