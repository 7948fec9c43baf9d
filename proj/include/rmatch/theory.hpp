#pragma once

#include "rmatch/solvers.hpp"
#include "rmatch/systems.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace rmatch {

// ---------------------------------------------------------------------------
// t-minors: deletions, contractions (of independent sets) and truncations.
// Element ids of each operation refer to the ground set of the minor built
// so far; the resulting system is re-indexed densely.
// ---------------------------------------------------------------------------

struct MinorOp {
  enum class Kind { deletion, contraction, truncation };
  Kind kind = Kind::deletion;
  ElemSet elems;  // deletion/contraction
  int k = 0;      // truncation

  static MinorOp deletion(ElemSet x) {
    return {Kind::deletion, std::move(x), 0};
  }
  static MinorOp contraction(ElemSet x) {
    return {Kind::contraction, std::move(x), 0};
  }
  static MinorOp truncation(int k) { return {Kind::truncation, {}, k}; }
};
using MinorSpec = std::vector<MinorOp>;

class MinorSystem final : public IndependenceSystem {
 public:
  MinorSystem(std::shared_ptr<const IndependenceSystem> base,
              const MinorSpec& spec);
  int ground_size() const override {
    return static_cast<int>(alive_.size());
  }
  bool is_independent(std::span<const int> elems) const override;

  // new element id -> id in the base system
  const std::vector<int>& alive() const { return alive_; }

 private:
  std::shared_ptr<const IndependenceSystem> base_;
  std::vector<int> alive_;
  ElemSet contracted_;  // base ids
  int truncation_;
};

std::shared_ptr<const IndependenceSystem> apply_minor(
    std::shared_ptr<const IndependenceSystem> base, const MinorSpec& spec);

// ---------------------------------------------------------------------------
// Structural checkers. All are exhaustive over the system (mask-table based,
// ground size capped) but sample the infinite space of bit-functions.
// ---------------------------------------------------------------------------

struct BitSampler {
  int exponent_lo = -4;
  int exponent_hi = 4;
  int samples = 200;
  std::uint64_t seed = 1;
};

// Concrete samples drawn by a BitSampler, plus extreme exponents
// +-(|E|+2) mixed in to exercise widely separated scales.
std::vector<BitFunction> sample_bit_functions(int ground,
                                              const BitSampler& sampler);

struct BitConcavityWitness {
  BitFunction w;
  int k = 0;  // OPT_k + OPT_{k+2} > 2 OPT_{k+1}
};

struct GoodnessWitness {
  BitFunction w;
  ElemSet set;  // a lexicographically maximal set that is not 1-robust
  int k = 0;
};

struct TwoExtendibilityWitness {
  ElemSet x;
  ElemSet y;
  int elem = 0;
};

// Single bit-function probes.
std::optional<int> bit_concavity_violation(const IndependenceSystem& sys,
                                           const BitFunction& w,
                                           int cap = kDefaultEnumerationCap);
std::optional<GoodnessWitness> check_good(const IndependenceSystem& sys,
                                          const BitFunction& w,
                                          int cap = kDefaultEnumerationCap);

// Sampled checks; `extra` bit-functions are probed first.
std::optional<BitConcavityWitness> check_bit_concave(
    const IndependenceSystem& sys, const BitSampler& sampler,
    const std::vector<BitFunction>& extra = {},
    int cap = kDefaultEnumerationCap);
std::optional<GoodnessWitness> check_good_sampled(
    const IndependenceSystem& sys, const BitSampler& sampler,
    const std::vector<BitFunction>& extra = {},
    int cap = kDefaultEnumerationCap);

// Exhaustive over (X, Y, y in Y \ X), searching all |Z| <= 2 repairs.
std::optional<TwoExtendibilityWitness> check_2_extendible(
    const IndependenceSystem& sys, int cap = kDefaultEnumerationCap);

// Evaluates the four equivalent characterizations on shared samples:
// (i) bit-concavity, (ii) bit-concavity of sampled minors, (iii) lex-maximal
// sets of sampled minors are weight-maximal for sampled weightings,
// (iv) goodness. Disagreement between the predicates indicates a bug in
// this library, not a property of the system.
struct EquivalenceReport {
  bool bit_concave = false;
  bool minors_bit_concave = false;
  bool lex_optimal_in_minors = false;
  bool good = false;
  std::optional<BitConcavityWitness> concavity_witness;
  std::optional<GoodnessWitness> goodness_witness;

  bool consistent() const {
    return bit_concave == minors_bit_concave &&
           bit_concave == lex_optimal_in_minors && bit_concave == good;
  }
};

EquivalenceReport check_equivalences(
    std::shared_ptr<const IndependenceSystem> sys, int minor_depth,
    const BitSampler& sampler, const std::vector<BitFunction>& extra = {},
    int cap = kDefaultEnumerationCap);

}  // namespace rmatch
