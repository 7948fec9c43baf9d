#pragma once

#include "rmatch/graph.hpp"
#include "rmatch/sets.hpp"

#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

namespace rmatch {

inline constexpr int kDefaultEnumerationCap = 20;

// Thrown when an exact computation would need to enumerate past the cap.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Downward-closed set family given by an independence oracle over element
// ids 0..ground_size()-1. Implementations are immutable and oracles are
// pure, so systems can be shared freely across threads.
class IndependenceSystem {
 public:
  virtual ~IndependenceSystem() = default;
  virtual int ground_size() const = 0;
  // elems must be sorted ascending, duplicate free and within range.
  virtual bool is_independent(std::span<const int> elems) const = 0;

  // Oracle entry point that validates the query first.
  bool is_independent_checked(std::span<const int> elems) const;
};

class MatchingSystem final : public IndependenceSystem {
 public:
  explicit MatchingSystem(WeightedGraph g) : graph_(std::move(g)) {}
  int ground_size() const override { return graph_.edge_count(); }
  bool is_independent(std::span<const int> elems) const override;
  const WeightedGraph& graph() const { return graph_; }

 private:
  WeightedGraph graph_;
};

class BMatchingSystem final : public IndependenceSystem {
 public:
  BMatchingSystem(WeightedGraph g, std::vector<int> bounds);
  int ground_size() const override { return graph_.edge_count(); }
  bool is_independent(std::span<const int> elems) const override;
  const WeightedGraph& graph() const { return graph_; }
  const std::vector<int>& bounds() const { return bounds_; }

 private:
  WeightedGraph graph_;
  std::vector<int> bounds_;
};

// Marker base for systems satisfying the matroid exchange axiom. The axiom
// is spot-checked in tests, not enforced here.
class Matroid : public IndependenceSystem {};

class UniformMatroid final : public Matroid {
 public:
  UniformMatroid(int ground, int rank);
  int ground_size() const override { return ground_; }
  bool is_independent(std::span<const int> elems) const override {
    return static_cast<int>(elems.size()) <= rank_;
  }
  int rank() const { return rank_; }

 private:
  int ground_;
  int rank_;
};

class PartitionMatroid final : public Matroid {
 public:
  // block_of[e] = block index of element e; caps[b] = capacity of block b.
  PartitionMatroid(std::vector<int> block_of, std::vector<int> caps);
  int ground_size() const override {
    return static_cast<int>(block_of_.size());
  }
  bool is_independent(std::span<const int> elems) const override;

 private:
  std::vector<int> block_of_;
  std::vector<int> caps_;
};

class MatroidIntersection final : public IndependenceSystem {
 public:
  MatroidIntersection(std::shared_ptr<const Matroid> a,
                      std::shared_ptr<const Matroid> b);
  int ground_size() const override { return a_->ground_size(); }
  bool is_independent(std::span<const int> elems) const override {
    return a_->is_independent(elems) && b_->is_independent(elems);
  }

 private:
  std::shared_ptr<const Matroid> a_;
  std::shared_ptr<const Matroid> b_;
};

// Independence = subset of one of the listed bases. Bases contained in
// another base are dropped so that the stored list is an antichain.
class ExplicitSystem final : public IndependenceSystem {
 public:
  ExplicitSystem(int ground, std::vector<ElemSet> bases);
  int ground_size() const override { return ground_; }
  bool is_independent(std::span<const int> elems) const override;
  const std::vector<ElemSet>& bases() const { return bases_; }

 private:
  int ground_;
  std::vector<ElemSet> bases_;
  std::vector<std::uint64_t> base_masks_;
};

// All independent sets (or only the inclusionwise maximal ones), in
// lexicographic id order. Throws ResourceLimitError past the cap.
std::vector<ElemSet> enumerate_independent(const IndependenceSystem& sys,
                                           bool maximal_only,
                                           int cap = kDefaultEnumerationCap);

}  // namespace rmatch
