#pragma once

#include "rmatch/quad.hpp"
#include "rmatch/sets.hpp"

#include <span>
#include <vector>

namespace rmatch {

// Non-negative weights indexed by dense element ids.
class Weighting {
 public:
  Weighting() = default;
  explicit Weighting(std::vector<Quad> w);

  int size() const { return static_cast<int>(w_.size()); }
  const Quad& operator[](int e) const { return w_[static_cast<size_t>(e)]; }
  const std::vector<Quad>& values() const { return w_; }

  Quad sum(std::span<const int> elems) const;
  bool all_positive() const;

  friend bool operator==(const Weighting&, const Weighting&) = default;

 private:
  std::vector<Quad> w_;
};

// Power-of-two weighting given by its exponents: w_e = 2^(exponents[e]).
struct BitFunction {
  std::vector<int> exponents;
  Weighting to_weighting() const;
};

// Elements of s ordered by decreasing weight, ties by smaller id.
std::vector<int> order_by_weight(std::span<const int> s, const Weighting& w);

// The k heaviest elements of s (all of s when |s| < k), as a canonical set.
ElemSet top_k(std::span<const int> s, const Weighting& w, int k);

Quad top_k_weight(std::span<const int> s, const Weighting& w, int k);

// floor(log2 w) plus the fractional part of log2 w. The fractional part is
// exact (as a rational) when w is 2^j or 2^j*sqrt2; otherwise it is rounded
// to the 2^-40 grid. Requires w > 0.
struct Log2Parts {
  long floor_log2 = 0;
  Rational frac;
  bool exact = false;
};
Log2Parts log2_parts(const Quad& w);

}  // namespace rmatch
