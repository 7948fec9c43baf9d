#include "rmatch/graph.hpp"

#include <set>
#include <stdexcept>
#include <vector>

namespace rmatch {

std::optional<std::vector<int>> WeightedGraph::bipartition() const {
  std::vector<std::vector<int>> adj(n_vertices);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> color(n_vertices, -1);
  std::vector<int> stack;
  for (int s = 0; s < n_vertices; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : adj[u]) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          stack.push_back(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

WeightedGraph make_graph(int n_vertices,
                         std::vector<std::pair<int, int>> edges,
                         std::vector<Quad> weights) {
  if (n_vertices < 0) throw std::invalid_argument("negative vertex count");
  if (edges.size() != weights.size())
    throw std::invalid_argument("edge/weight count mismatch");
  std::set<std::pair<int, int>> seen;
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n_vertices || v >= n_vertices)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loop edge");
    if (!seen.insert(std::minmax(u, v)).second)
      throw std::invalid_argument("duplicate edge");
  }
  return WeightedGraph{n_vertices, std::move(edges),
                       Weighting(std::move(weights))};
}

}  // namespace rmatch
