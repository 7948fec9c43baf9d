#pragma once

#include "rmatch/solvers.hpp"

#include <utility>
#include <vector>

namespace rmatch {

// Finite probability distribution over independent sets. Probabilities are
// exact and sum to exactly 1.
struct RandomizedSolution {
  struct Entry {
    ElemSet set;
    Quad prob;
  };
  std::vector<Entry> support;

  void validate(const IndependenceSystem& sys) const;
};

// Per-cardinality achieved weight vs OPT_k, and the worst ratio.
struct RobustnessReport {
  struct PerK {
    int k = 0;
    Quad achieved;
    Quad opt;
    Quad ratio;  // 1 when OPT_k = 0
  };
  std::vector<PerK> per_k;  // k = 1..r
  Quad alpha;
  int argmin_k = 0;
};

// Distribution over cardinalities for the priority objective.
struct PriorityDistribution {
  std::vector<std::pair<int, Quad>> mass;  // (k, probability), k >= 1, sorted
  void validate() const;
};

// Independent set maximizing the squared weights. Ties prefer the larger
// cardinality, then the smallest id sequence.
ElemSet squared_weight_solution(const IndependenceSystem& sys,
                                const Weighting& w,
                                const SolveOptions& opt = {});

RobustnessReport robustness(const IndependenceSystem& sys, const Weighting& w,
                            const ElemSet& s, const SolveOptions& opt = {});

RobustnessReport randomized_robustness(const IndependenceSystem& sys,
                                       const Weighting& w,
                                       const RandomizedSolution& lam,
                                       const SolveOptions& opt = {});

// w^[x]_e = 2^floor(log2 w_e - x). Every output weight is a power of two.
// Requires all weights positive and x in [0, 1].
Weighting rounded_weights(const Weighting& w, const Rational& x);

// The randomized rounding distribution: one lexicographically maximal set
// per interval of the rounding parameter, weighted by interval length.
// Zero-weight elements are stripped first. Support size is at most the
// number of distinct log2 fractional parts plus one.
RandomizedSolution randomized_robust(const IndependenceSystem& sys,
                                     const Weighting& w,
                                     const SolveOptions& opt = {});

// E_{k~mu} w(S_k); the caller guarantees S is independent.
Quad priority_value(const ElemSet& s, const Weighting& w,
                    const PriorityDistribution& mu);

// The support element of lam with the best priority value.
ElemSet priority_best_in_support(const RandomizedSolution& lam,
                                 const Weighting& w,
                                 const PriorityDistribution& mu);

// Conversions between the priority-coefficient form (non-increasing c) and
// the cardinality distribution form. f(M) = scale * sum_k mu_k w(M_k).
std::pair<PriorityDistribution, Quad> priorities_to_mu(
    const std::vector<Quad>& c);
std::vector<Quad> mu_to_priorities(const PriorityDistribution& mu);

}  // namespace rmatch
