#pragma once

#include "rmatch/graph.hpp"
#include "rmatch/sets.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace rmatch {

// Maximal paths/cycles of the symmetric difference of two matchings, each
// listed in walk order so that edges alternate between the two sides.
struct ComponentDecomposition {
  struct Component {
    std::vector<int> edges;  // walk order
    bool is_cycle = false;
  };
  std::vector<Component> components;  // ordered by smallest edge id
  ElemSet common;                     // M intersect M'
};

ComponentDecomposition decompose(const ElemSet& m, const ElemSet& mp,
                                 const WeightedGraph& g);

// delta in (0,1) and the cardinality threshold K, plus the derived
// constants: D1 = 18/delta + 3, D2 = D1^(D1+4), D3 = 6/delta + 2,
// delta' = delta/3, beta = (delta'/(1+delta'))^D1, gamma = beta/(D1 D3).
// D2 and beta are exact when D1 is an integer; otherwise D2 falls back to
// the +infinity sentinel and beta/gamma to dyadic approximations, which only
// loosens constants the proof wants "sufficiently large" anyway.
struct MergeParams {
  Rational delta;
  int K = 1;
  Rational d1;
  std::optional<BigInt> d2;  // nullopt = +infinity sentinel
  Rational d3;
  Rational delta_prime;
  Rational beta;
  Rational gamma;

  static MergeParams make(const Rational& delta, int K);
};

// The three simplification passes. The returned matchings live inside
// M union M' and the three postconditions are hard-asserted:
//   (a) w(Mbar_k) >= (1-delta) w(M_k), same primed, for all k >= K;
//   (b) every component of Mbar ^ Mbar' has <= D1 edges and weight
//       <= (D2/K) min(w(Mbar_K), w(Mbar'_K));
//   (c) D3 w(Mbar_k) >= w(Mbar'_k) >= w(Mbar_k)/D3 for all k >= K.
std::pair<ElemSet, ElemSet> simplify_pair(const ElemSet& m, const ElemSet& mp,
                                          const WeightedGraph& g,
                                          const Weighting& w,
                                          const MergeParams& params);

struct MergeStats {
  ElemSet best;               // sample maximizing the min ratio
  double best_min_ratio = 1;  // min over k >= K of w(best_k) / conv_k
  int samples = 0;
  // Per k (1-based): empirical mean/variance of W*_k = w(M* cap
  // (Mbar_k u Mbar'_k)) and the convex-combination target.
  std::vector<double> wstar_mean;
  std::vector<double> wstar_var;
  std::vector<double> target;
};

// Component-wise random merge: keep the common edges, pick each component's
// Mbar side with probability mu. Every sample is validated as a matching.
MergeStats random_merge(const ElemSet& mbar, const ElemSet& mbarp,
                        const WeightedGraph& g, const Weighting& w, double mu,
                        int K, int samples, std::uint64_t seed);

}  // namespace rmatch
