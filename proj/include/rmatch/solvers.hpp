#pragma once

#include "rmatch/systems.hpp"
#include "rmatch/weights.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace rmatch {

// The vector (OPT_0, ..., OPT_r) for a system and weighting, r = maximum
// independent-set size, together with one optimal witness per cardinality.
struct OptProfile {
  std::vector<Quad> values;
  std::vector<ElemSet> witnesses;

  int max_size() const { return static_cast<int>(values.size()) - 1; }
  const Quad& at(int k) const {
    const int r = max_size();
    return values[static_cast<size_t>(k < r ? k : r)];
  }
  const ElemSet& witness(int k) const {
    const int r = max_size();
    return witnesses[static_cast<size_t>(k < r ? k : r)];
  }
  bool is_concave() const;
};

struct SolveOptions {
  int enumeration_cap = kDefaultEnumerationCap;
};

// Reference implementation: plain exhaustive enumeration, no pruning, no
// polynomial shortcuts. Used as the independent oracle in tests.
OptProfile brute_force_profile(const IndependenceSystem& sys,
                               const Weighting& w,
                               int cap = kDefaultEnumerationCap);

// Exact profile via successive maximum-gain augmenting paths. Requires a
// bipartite graph; the produced profile is concave.
OptProfile bipartite_profile(const WeightedGraph& g, const Weighting& w);

// Exact OPT profile. Dispatches to the polynomial bipartite path for
// matching systems on bipartite graphs and to enumeration otherwise.
OptProfile opt_profile(const IndependenceSystem& sys, const Weighting& w,
                       const SolveOptions& opt = {});

// Max-weight independent set with at most k elements.
std::pair<ElemSet, Quad> max_weight_at_most_k(const IndependenceSystem& sys,
                                              const Weighting& w, int k,
                                              const SolveOptions& opt = {});

// Max-weight independent set without a cardinality bound. Ties are broken
// toward larger cardinality, then the smallest id sequence.
std::pair<ElemSet, Quad> max_weight_set(const IndependenceSystem& sys,
                                        const Weighting& w,
                                        const SolveOptions& opt = {});

// Surrogate weights that linearize the lexicographic order: distinct
// weights are ranked 1..d ascending and element e gets (|E|+1)^(2 rank_e).
// Base |E|+1 makes the sum faithful for any element count.
std::vector<Quad> lex_surrogate(const Weighting& w,
                                std::span<const int> candidates);

// A set whose decreasing weight sequence is lexicographically maximal among
// independent subsets of `candidates` (default: the whole ground set).
ElemSet lex_max(const IndependenceSystem& sys, const Weighting& w,
                const SolveOptions& opt = {});
ElemSet lex_max(const IndependenceSystem& sys, const Weighting& w,
                std::span<const int> candidates, const SolveOptions& opt = {});

// Compares decreasing weight sequences; longer wins on a shared prefix.
int compare_lex_keys(std::span<const int> a, std::span<const int> b,
                     const Weighting& w);

// Standard greedy by decreasing weight (ties by id); output is maximal.
ElemSet greedy(const IndependenceSystem& sys, const Weighting& w);

}  // namespace rmatch
