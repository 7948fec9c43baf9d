#pragma once

#include "rmatch/weights.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace rmatch {

// Undirected graph with non-negative edge weights. Edge ids are dense and
// double as the ground set of the matching systems built on top.
struct WeightedGraph {
  int n_vertices = 0;
  std::vector<std::pair<int, int>> edges;
  Weighting weights;  // indexed by edge id

  int edge_count() const { return static_cast<int>(edges.size()); }

  // Colors 0/1 per vertex when the graph is bipartite, nullopt otherwise.
  std::optional<std::vector<int>> bipartition() const;
};

// Validates endpoints, rejects loops and duplicate unordered pairs.
WeightedGraph make_graph(int n_vertices,
                         std::vector<std::pair<int, int>> edges,
                         std::vector<Quad> weights);

}  // namespace rmatch
