#pragma once

// Deterministic random-instance corpora shared by the unit tests and the
// acceptance suite.

#include "rmatch/generators.hpp"
#include "rmatch/systems.hpp"

#include <memory>
#include <random>
#include <string>
#include <vector>

namespace corpus {

using namespace rmatch;

struct CorpusInstance {
  std::string name;
  std::shared_ptr<const IndependenceSystem> sys;
  Weighting weights;
  std::shared_ptr<const WeightedGraph> graph;  // null for matroid systems
};

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Log-uniform in [1, W] as an exact dyadic rational.
inline Quad log_uniform_weight(std::mt19937_64& rng, int w) {
  const double e = uniform01(rng) * std::log2(static_cast<double>(w));
  return Quad::from_double(std::exp2(e));
}

inline WeightedGraph random_graph_capped(std::mt19937_64& rng, int max_edges) {
  for (;;) {
    const int n = 4 + static_cast<int>(rng() % 4);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (uniform01(rng) < 0.5) edges.emplace_back(u, v);
    if (edges.empty()) continue;
    if (static_cast<int>(edges.size()) > max_edges) edges.resize(max_edges);
    std::vector<Quad> weights;
    for (std::size_t i = 0; i < edges.size(); ++i)
      weights.push_back(log_uniform_weight(rng, 64));
    return make_graph(n, std::move(edges), std::move(weights));
  }
}

// Matchings, b-matchings and uniform x partition matroid intersections with
// at most 10 elements and log-uniform weights in [1, 64]. All of these are
// concave systems, so the randomized rounding guarantee applies.
inline std::vector<CorpusInstance> good_family(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CorpusInstance> out;
  out.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    CorpusInstance inst;
    const int kind = i % 3;
    if (kind == 0 || kind == 1) {
      auto g = std::make_shared<WeightedGraph>(random_graph_capped(rng, 10));
      inst.graph = g;
      inst.weights = g->weights;
      if (kind == 0) {
        inst.name = "matching-" + std::to_string(i);
        inst.sys = std::make_shared<MatchingSystem>(*g);
      } else {
        inst.name = "b-matching-" + std::to_string(i);
        std::vector<int> b;
        for (int v = 0; v < g->n_vertices; ++v)
          b.push_back(1 + static_cast<int>(rng() % 3));
        inst.sys = std::make_shared<BMatchingSystem>(*g, std::move(b));
      }
    } else {
      inst.name = "matroid-intersection-" + std::to_string(i);
      const int m = 4 + static_cast<int>(rng() % 7);
      const int rank = 1 + static_cast<int>(rng() % m);
      const int blocks = 2 + static_cast<int>(rng() % 3);
      std::vector<int> block_of;
      for (int e = 0; e < m; ++e)
        block_of.push_back(static_cast<int>(rng() % blocks));
      std::vector<int> caps;
      for (int b = 0; b < blocks; ++b)
        caps.push_back(1 + static_cast<int>(rng() % 3));
      inst.sys = std::make_shared<MatroidIntersection>(
          std::make_shared<UniformMatroid>(m, rank),
          std::make_shared<PartitionMatroid>(std::move(block_of),
                                             std::move(caps)));
      std::vector<Quad> weights;
      for (int e = 0; e < m; ++e)
        weights.push_back(log_uniform_weight(rng, 64));
      inst.weights = Weighting(std::move(weights));
    }
    out.push_back(std::move(inst));
  }
  return out;
}

// Random bipartite graphs with sides of at most 5 vertices and integer
// weights in 1..20.
inline std::vector<WeightedGraph> bipartite_family(int count,
                                                   std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<WeightedGraph> out;
  out.reserve(static_cast<size_t>(count));
  while (static_cast<int>(out.size()) < count) {
    const int left = 1 + static_cast<int>(rng() % 5);
    const int right = 1 + static_cast<int>(rng() % 5);
    std::vector<std::pair<int, int>> edges;
    std::vector<Quad> weights;
    for (int u = 0; u < left; ++u) {
      for (int v = 0; v < right; ++v) {
        if (uniform01(rng) < 0.6) {
          edges.emplace_back(u, left + v);
          weights.push_back(Quad(1 + static_cast<long>(rng() % 20)));
        }
      }
    }
    if (edges.empty()) continue;
    out.push_back(make_graph(left + right, std::move(edges),
                             std::move(weights)));
  }
  return out;
}

inline ElemSet random_maximal_matching(const WeightedGraph& g,
                                       std::mt19937_64& rng) {
  std::vector<int> order(static_cast<size_t>(g.edge_count()));
  for (int e = 0; e < g.edge_count(); ++e) order[static_cast<size_t>(e)] = e;
  for (std::size_t i = order.size(); i > 1; --i)
    std::swap(order[i - 1], order[rng() % i]);
  std::vector<char> used(static_cast<size_t>(g.n_vertices), 0);
  ElemSet m;
  for (int e : order) {
    const auto& [u, v] = g.edges[e];
    if (used[static_cast<size_t>(u)] || used[static_cast<size_t>(v)]) continue;
    used[static_cast<size_t>(u)] = used[static_cast<size_t>(v)] = 1;
    m.push_back(e);
  }
  return canonical_set(std::move(m));
}

// A pair of matchings sharing no edge (the second is drawn after deleting
// the first one's edges).
inline std::pair<ElemSet, ElemSet> disjoint_matching_pair(
    const WeightedGraph& g, std::mt19937_64& rng) {
  const ElemSet m1 = random_maximal_matching(g, rng);
  std::vector<int> order;
  for (int e = 0; e < g.edge_count(); ++e)
    if (!set_contains(m1, e)) order.push_back(e);
  for (std::size_t i = order.size(); i > 1; --i)
    std::swap(order[i - 1], order[rng() % i]);
  std::vector<char> used(static_cast<size_t>(g.n_vertices), 0);
  ElemSet m2;
  for (int e : order) {
    const auto& [u, v] = g.edges[e];
    if (used[static_cast<size_t>(u)] || used[static_cast<size_t>(v)]) continue;
    used[static_cast<size_t>(u)] = used[static_cast<size_t>(v)] = 1;
    m2.push_back(e);
  }
  return {m1, canonical_set(std::move(m2))};
}

}  // namespace corpus
