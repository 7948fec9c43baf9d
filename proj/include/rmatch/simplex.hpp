#pragma once

#include "rmatch/quad.hpp"

#include <vector>

namespace rmatch::lp {

// max c^T x  s.t.  A x <= b, x >= 0, with b >= 0 so the slack basis is
// feasible and no phase-1 is needed. All arithmetic is exact over Q(sqrt 2);
// Bland's rule guarantees termination.
struct Canonical {
  std::vector<std::vector<Quad>> A;
  std::vector<Quad> b;
  std::vector<Quad> c;
};

struct Solution {
  enum class Status { optimal, unbounded };
  Status status = Status::optimal;
  Quad value;
  std::vector<Quad> x;  // primal solution
  std::vector<Quad> y;  // dual prices per row, y >= 0
};

Solution maximize(const Canonical& prob);

}  // namespace rmatch::lp
