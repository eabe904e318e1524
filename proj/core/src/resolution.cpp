#include "regalia/resolution.hpp"

#include "regalia/groebner.hpp"

#include <stdexcept>
#include <vector>

namespace regalia {

int default_resolution_cap(const RingPtr& ring) { return 2 * ring->nvars() + 4; }

Resolution free_resolution(const GradedMatrix& presentation, int cap) {
  const RingPtr& ring = presentation.target().ring;
  if (cap < 0) cap = default_resolution_cap(ring);
  bool finite_guaranteed = ring->is_polynomial_ring();

  std::vector<FreeModule> modules = {presentation.target()};
  std::vector<GradedMatrix> diffs;
  if (presentation.cols() > 0) {
    modules.push_back(presentation.source());
    diffs.push_back(presentation);
  }
  ChainComplex c(modules, diffs);
  c = minimalize(std::move(c));

  Resolution res{std::move(c), false};
  for (;;) {
    int top = res.complex.length();
    if (top > 0 && res.complex.module(top).rank() == 0) break;
    if (!finite_guaranteed && top >= cap) {
      // The kernel at the top may be nonzero: mark and stop.
      GradedMatrix last_syz =
          top == 0 ? GradedMatrix(res.complex.module(0), FreeModule{ring, {}})
                   : syzygy_matrix(res.complex.d(top));
      res.truncated = last_syz.cols() > 0;
      break;
    }
    GradedMatrix z = top == 0
                         ? GradedMatrix(res.complex.module(0), FreeModule{ring, {}})
                         : syzygy_matrix(res.complex.d(top));
    if (top == 0 && res.complex.module(0).rank() > 0) {
      // A free module resolves itself.
      break;
    }
    if (z.cols() == 0) break;
    std::vector<FreeModule> ms;
    std::vector<GradedMatrix> ds;
    for (int i = 0; i <= top; ++i) ms.push_back(res.complex.module(i));
    for (int i = 1; i <= top; ++i) ds.push_back(res.complex.d(i));
    ms.push_back(z.source());
    ds.push_back(z);
    res.complex = minimalize(ChainComplex(std::move(ms), std::move(ds)));
  }
  return res;
}

}  // namespace regalia
