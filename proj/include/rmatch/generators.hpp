#pragma once

#include "rmatch/graph.hpp"
#include "rmatch/weights.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rmatch {

// The 4-vertex path with weights (1, sqrt2, 1); edge ids 0=left, 1=middle,
// 2=right. The baseline tight instance for deterministic robustness.
WeightedGraph gen_tight_path();

// 2^n vertices; 2^k edges {v_i, v_{i+2^k}} of type k for k = 0..n-1 and
// i = 0..2^k-1, weight 2^((n-k)/n). Half-integer exponents are stored
// exactly, others as dyadic approximations accurate to 2^-60.
WeightedGraph gen_tight_family(int n);

// K disjoint copies of gen_tight_path().
WeightedGraph gen_copies(int K);

// The 2-extendible-but-not-good system on {a1,a2,b1,b2,b3,b4} (ids 0..5),
// bases A={a1,a2}, B={b1..b4}, C={a1,b3,b4}, D={a2,b3,b4}, bundled with the
// bit-function weights (2,2,2,1,1,1) that defeat goodness.
struct ExplicitInstance {
  int ground = 0;
  std::vector<ElemSet> bases;
  Weighting weights;
};
ExplicitInstance gen_not_good();

enum class WeightDist { uniform_int, log_uniform };

// Erdos-Renyi style graph; weights either uniform integers in [1, W] or
// log-uniform in [1, W]. Deterministic for a fixed seed.
WeightedGraph gen_random(int n_vertices, double edge_prob, WeightDist dist,
                         int W, std::uint64_t seed);

}  // namespace rmatch
