#include "rmatch/systems.hpp"

#include <algorithm>
#include <string>

namespace rmatch {

bool IndependenceSystem::is_independent_checked(
    std::span<const int> elems) const {
  if (!is_canonical_set(elems))
    throw std::invalid_argument("element set must be sorted and duplicate free");
  if (!elems.empty() && (elems.front() < 0 || elems.back() >= ground_size()))
    throw std::invalid_argument("element id out of range");
  return is_independent(elems);
}

bool MatchingSystem::is_independent(std::span<const int> elems) const {
  std::vector<int> used;
  used.reserve(elems.size() * 2);
  for (int e : elems) {
    const auto& [u, v] = graph_.edges[e];
    used.push_back(u);
    used.push_back(v);
  }
  std::sort(used.begin(), used.end());
  return std::adjacent_find(used.begin(), used.end()) == used.end();
}

BMatchingSystem::BMatchingSystem(WeightedGraph g, std::vector<int> bounds)
    : graph_(std::move(g)), bounds_(std::move(bounds)) {
  if (static_cast<int>(bounds_.size()) != graph_.n_vertices)
    throw std::invalid_argument("degree bound count mismatch");
  for (int b : bounds_)
    if (b < 0) throw std::invalid_argument("negative degree bound");
}

bool BMatchingSystem::is_independent(std::span<const int> elems) const {
  std::vector<int> deg(graph_.n_vertices, 0);
  for (int e : elems) {
    const auto& [u, v] = graph_.edges[e];
    if (++deg[u] > bounds_[u] || ++deg[v] > bounds_[v]) return false;
  }
  return true;
}

UniformMatroid::UniformMatroid(int ground, int rank)
    : ground_(ground), rank_(rank) {
  if (ground < 0 || rank < 0) throw std::invalid_argument("bad matroid params");
}

PartitionMatroid::PartitionMatroid(std::vector<int> block_of,
                                   std::vector<int> caps)
    : block_of_(std::move(block_of)), caps_(std::move(caps)) {
  for (int b : block_of_)
    if (b < 0 || b >= static_cast<int>(caps_.size()))
      throw std::invalid_argument("block index out of range");
  for (int c : caps_)
    if (c < 0) throw std::invalid_argument("negative block capacity");
}

bool PartitionMatroid::is_independent(std::span<const int> elems) const {
  std::vector<int> count(caps_.size(), 0);
  for (int e : elems) {
    const int b = block_of_[e];
    if (++count[b] > caps_[b]) return false;
  }
  return true;
}

MatroidIntersection::MatroidIntersection(std::shared_ptr<const Matroid> a,
                                         std::shared_ptr<const Matroid> b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (a_->ground_size() != b_->ground_size())
    throw std::invalid_argument("matroids have mismatched ground sizes");
}

ExplicitSystem::ExplicitSystem(int ground, std::vector<ElemSet> bases)
    : ground_(ground) {
  if (ground < 0 || ground > 64)
    throw std::invalid_argument("explicit system ground must be in 0..64");
  for (auto& b : bases) {
    b = canonical_set(std::move(b));
    if (!b.empty() && (b.front() < 0 || b.back() >= ground))
      throw std::invalid_argument("base element out of range");
  }
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  // Keep only inclusionwise maximal bases.
  for (std::size_t i = 0; i < bases.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < bases.size() && !dominated; ++j)
      if (i != j && is_subset(bases[i], bases[j])) dominated = true;
    if (!dominated) {
      bases_.push_back(bases[i]);
      base_masks_.push_back(set_to_mask(bases[i]));
    }
  }
  if (bases_.empty()) {
    bases_.push_back({});
    base_masks_.push_back(0);
  }
}

bool ExplicitSystem::is_independent(std::span<const int> elems) const {
  const std::uint64_t m = set_to_mask(elems);
  for (std::uint64_t b : base_masks_)
    if ((m & ~b) == 0) return true;
  return false;
}

namespace {

void enumerate_rec(const IndependenceSystem& sys, bool maximal_only,
                   ElemSet& current, int next,
                   std::vector<ElemSet>& out) {
  if (!maximal_only) {
    out.push_back(current);
  } else {
    bool maximal = true;
    for (int e = 0; e < sys.ground_size() && maximal; ++e) {
      if (set_contains(current, e)) continue;
      ElemSet ext = current;
      ext.insert(std::lower_bound(ext.begin(), ext.end(), e), e);
      if (sys.is_independent(ext)) maximal = false;
    }
    if (maximal) out.push_back(current);
  }
  for (int e = next; e < sys.ground_size(); ++e) {
    current.push_back(e);
    if (sys.is_independent(current))
      enumerate_rec(sys, maximal_only, current, e + 1, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<ElemSet> enumerate_independent(const IndependenceSystem& sys,
                                           bool maximal_only, int cap) {
  if (sys.ground_size() > cap)
    throw ResourceLimitError("ground size " +
                             std::to_string(sys.ground_size()) +
                             " exceeds enumeration cap " + std::to_string(cap));
  std::vector<ElemSet> out;
  ElemSet current;
  enumerate_rec(sys, maximal_only, current, 0, out);
  return out;
}

}  // namespace rmatch
