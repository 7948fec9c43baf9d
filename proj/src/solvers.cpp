#include "rmatch/solvers.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace rmatch {

bool OptProfile::is_concave() const {
  for (std::size_t k = 0; k + 2 < values.size(); ++k)
    if (values[k] + values[k + 2] > 2 * values[k + 1]) return false;
  return true;
}

namespace {

void check_cap(const IndependenceSystem& sys, int cap) {
  if (sys.ground_size() > cap)
    throw ResourceLimitError("ground size " +
                             std::to_string(sys.ground_size()) +
                             " exceeds enumeration cap " + std::to_string(cap));
}

void check_weights(const IndependenceSystem& sys, const Weighting& w) {
  if (w.size() != sys.ground_size())
    throw std::invalid_argument("weighting size mismatch");
}

std::vector<int> all_elements(int n) {
  std::vector<int> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = i;
  return ids;
}

// Collects the best set of every exact cardinality, then turns those into
// the saturated OPT profile (prefix maxima over sizes).
struct ProfileAccumulator {
  std::vector<std::optional<Quad>> best;
  std::vector<ElemSet> witness;

  explicit ProfileAccumulator(int n)
      : best(static_cast<size_t>(n) + 1), witness(static_cast<size_t>(n) + 1) {}

  void offer(const ElemSet& s, const Quad& weight) {
    auto& slot = best[s.size()];
    if (!slot || weight > *slot) {
      slot = weight;
      witness[s.size()] = s;
    }
  }

  OptProfile finish() const {
    int r = 0;
    for (std::size_t k = 0; k < best.size(); ++k)
      if (best[k]) r = static_cast<int>(k);
    OptProfile p;
    p.values.resize(static_cast<size_t>(r) + 1);
    p.witnesses.resize(static_cast<size_t>(r) + 1);
    Quad run;
    ElemSet run_witness;
    for (int k = 0; k <= r; ++k) {
      if (best[k] && *best[k] > run) {
        run = *best[k];
        run_witness = witness[k];
      }
      p.values[k] = run;
      p.witnesses[k] = run_witness;
    }
    return p;
  }
};

void profile_rec(const IndependenceSystem& sys, const Weighting& w,
                 ElemSet& current, Quad& weight, int next,
                 ProfileAccumulator& acc) {
  acc.offer(current, weight);
  for (int e = next; e < sys.ground_size(); ++e) {
    current.push_back(e);
    if (sys.is_independent(current)) {
      weight += w[e];
      profile_rec(sys, w, current, weight, e + 1, acc);
      weight -= w[e];
    }
    current.pop_back();
  }
}

}  // namespace

OptProfile brute_force_profile(const IndependenceSystem& sys,
                               const Weighting& w, int cap) {
  check_cap(sys, cap);
  check_weights(sys, w);
  ProfileAccumulator acc(sys.ground_size());
  ElemSet current;
  Quad weight;
  profile_rec(sys, w, current, weight, 0, acc);
  return acc.finish();
}

// ---------------------------------------------------------------------------
// Bipartite matching engine: successive maximum-gain augmenting paths. After
// i augmentations the matching is maximum-weight among matchings of size i
// (there are no positive alternating cycles then), so the per-size weights
// form the exact OPT profile.
// ---------------------------------------------------------------------------

namespace {

class BipartiteMatcher {
 public:
  BipartiteMatcher(const WeightedGraph& g, std::span<const Quad> weights,
                   std::span<const int> candidates,
                   const std::vector<int>& colors)
      : g_(g), w_(weights), colors_(colors), mate_(g.n_vertices, -1) {
    incident_.resize(static_cast<size_t>(g.n_vertices));
    for (int e : candidates) {
      const auto& [u, v] = g_.edges[e];
      incident_[u].push_back(e);
      incident_[v].push_back(e);
    }
  }

  // Label-correcting search for the maximum-gain augmenting path, applied in
  // place. Returns the gain, or nullopt when no augmenting path exists.
  std::optional<Quad> augment_once() {
    const int n = g_.n_vertices;
    std::vector<std::optional<Quad>> dist(static_cast<size_t>(n));
    std::vector<int> par(static_cast<size_t>(n), -1);
    std::vector<char> queued(static_cast<size_t>(n), 0);
    std::deque<int> queue;
    for (int u = 0; u < n; ++u) {
      if (colors_[u] == 0 && mate_[u] == -1) {
        dist[u] = Quad(0);
        queue.push_back(u);
        queued[u] = 1;
      }
    }

    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      queued[u] = 0;
      const Quad du = *dist[u];
      for (int e : incident_[u]) {
        if (e == mate_[u]) continue;
        const int v = other(e, u);
        if (mate_[v] == -1) continue;  // terminal, handled after fixpoint
        const int f = mate_[v];
        const int u2 = other(f, v);
        Quad next = du + w_[e] - w_[f];
        if (!dist[u2] || next > *dist[u2]) {
          dist[u2] = std::move(next);
          par[u2] = e;
          if (!queued[u2]) {
            queue.push_back(u2);
            queued[u2] = 1;
          }
        }
      }
    }

    // Best terminal: a free right vertex reached over one more edge.
    std::optional<Quad> best;
    int best_edge = -1;
    int best_end = -1;
    for (int u = 0; u < n; ++u) {
      if (colors_[u] != 0 || !dist[u]) continue;
      for (int e : incident_[u]) {
        if (e == mate_[u]) continue;
        const int v = other(e, u);
        if (mate_[v] != -1) continue;
        Quad gain = *dist[u] + w_[e];
        if (!best || gain > *best) {
          best = std::move(gain);
          best_edge = e;
          best_end = v;
        }
      }
    }
    if (!best) return std::nullopt;

    // Reconstruct the alternating path and flip it.
    std::vector<int> add{best_edge};
    std::vector<int> remove;
    int u = other(best_edge, best_end);
    while (mate_[u] != -1) {
      const int f = mate_[u];
      remove.push_back(f);
      const int v = other(f, u);
      const int e = par[u];
      add.push_back(e);
      u = other(e, v);
    }
    for (int f : remove) {
      mate_[g_.edges[f].first] = -1;
      mate_[g_.edges[f].second] = -1;
    }
    for (int e : add) {
      mate_[g_.edges[e].first] = e;
      mate_[g_.edges[e].second] = e;
    }
    return best;
  }

  ElemSet matching() const {
    ElemSet out;
    for (int v = 0; v < g_.n_vertices; ++v) {
      const int e = mate_[v];
      if (e != -1 && other(e, v) > v) out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  int other(int e, int v) const {
    const auto& [a, b] = g_.edges[e];
    return a == v ? b : a;
  }

  const WeightedGraph& g_;
  std::span<const Quad> w_;
  const std::vector<int>& colors_;
  std::vector<int> mate_;  // per vertex: matched edge id or -1
  std::vector<std::vector<int>> incident_;
};

// Best matching of every exact size, in augmentation order.
std::vector<std::pair<Quad, ElemSet>> bipartite_per_size(
    const WeightedGraph& g, std::span<const Quad> weights,
    std::span<const int> candidates, const std::vector<int>& colors) {
  BipartiteMatcher matcher(g, weights, candidates, colors);
  std::vector<std::pair<Quad, ElemSet>> out;
  out.emplace_back(Quad(0), ElemSet{});
  Quad weight;
  while (auto gain = matcher.augment_once()) {
    weight += *gain;
    out.emplace_back(weight, matcher.matching());
  }
  return out;
}

const MatchingSystem* bipartite_matching_system(
    const IndependenceSystem& sys) {
  const auto* m = dynamic_cast<const MatchingSystem*>(&sys);
  if (m && m->graph().bipartition()) return m;
  return nullptr;
}

}  // namespace

OptProfile bipartite_profile(const WeightedGraph& g, const Weighting& w) {
  if (w.size() != g.edge_count())
    throw std::invalid_argument("weighting size mismatch");
  const auto colors = g.bipartition();
  if (!colors) throw std::invalid_argument("graph is not bipartite");
  const auto per_size = bipartite_per_size(
      g, w.values(), all_elements(g.edge_count()), *colors);
  ProfileAccumulator acc(g.edge_count());
  for (const auto& [weight, m] : per_size) acc.offer(m, weight);
  OptProfile p = acc.finish();
  if (!p.is_concave())
    throw std::logic_error("bipartite profile is not concave");
  return p;
}

OptProfile opt_profile(const IndependenceSystem& sys, const Weighting& w,
                       const SolveOptions& opt) {
  if (sys.ground_size() <= opt.enumeration_cap)
    return brute_force_profile(sys, w, opt.enumeration_cap);
  if (const auto* m = bipartite_matching_system(sys))
    return bipartite_profile(m->graph(), w);
  check_cap(sys, opt.enumeration_cap);  // throws
  return {};
}

// ---------------------------------------------------------------------------
// Cardinality-bounded and unbounded maximization
// ---------------------------------------------------------------------------

namespace {

// DFS over independent sets in decreasing weight order with an optimistic
// completion bound (the heaviest still-available elements). Pruning is
// strict so weight ties survive for the cardinality/id tie-break.
struct BoundedSearch {
  const IndependenceSystem& sys;
  const Weighting& w;
  int k;
  std::vector<int> by_weight;
  std::vector<Quad> prefix;  // prefix sums over by_weight

  ElemSet best_set;
  Quad best_weight;

  BoundedSearch(const IndependenceSystem& s, const Weighting& wt, int kk)
      : sys(s), w(wt), k(kk) {
    by_weight = order_by_weight(all_elements(sys.ground_size()), w);
    prefix.resize(by_weight.size() + 1);
    for (std::size_t i = 0; i < by_weight.size(); ++i)
      prefix[i + 1] = prefix[i] + w[by_weight[i]];
  }

  Quad suffix_top(std::size_t i, int count) const {
    const std::size_t j = std::min(by_weight.size(), i + static_cast<size_t>(count));
    return prefix[j] - prefix[i];
  }

  bool better(const ElemSet& s, const Quad& weight) const {
    if (weight != best_weight) return weight > best_weight;
    if (s.size() != best_set.size()) return s.size() > best_set.size();
    return s < best_set;
  }

  void run(ElemSet& current, Quad& weight, std::size_t next) {
    if (better(current, weight)) {
      best_set = current;
      best_weight = weight;
    }
    const int room = k - static_cast<int>(current.size());
    if (room <= 0) return;
    for (std::size_t i = next; i < by_weight.size(); ++i) {
      if (weight + suffix_top(i, room) < best_weight) return;
      const int e = by_weight[i];
      ElemSet ext = current;
      ext.insert(std::lower_bound(ext.begin(), ext.end(), e), e);
      if (!sys.is_independent(ext)) continue;
      current.swap(ext);
      weight += w[e];
      run(current, weight, i + 1);
      weight -= w[e];
      current.swap(ext);
    }
  }
};

}  // namespace

std::pair<ElemSet, Quad> max_weight_at_most_k(const IndependenceSystem& sys,
                                              const Weighting& w, int k,
                                              const SolveOptions& opt) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  check_weights(sys, w);
  if (k == 0) return {ElemSet{}, Quad(0)};
  if (sys.ground_size() <= opt.enumeration_cap) {
    BoundedSearch search(sys, w, std::min(k, sys.ground_size()));
    ElemSet current;
    Quad weight;
    search.run(current, weight, 0);
    return {search.best_set, search.best_weight};
  }
  if (const auto* m = bipartite_matching_system(sys)) {
    const OptProfile p = bipartite_profile(m->graph(), w);
    return {p.witness(k), p.at(k)};
  }
  check_cap(sys, opt.enumeration_cap);  // throws
  return {};
}

std::pair<ElemSet, Quad> max_weight_set(const IndependenceSystem& sys,
                                        const Weighting& w,
                                        const SolveOptions& opt) {
  check_weights(sys, w);
  if (sys.ground_size() <= opt.enumeration_cap)
    return max_weight_at_most_k(sys, w, sys.ground_size(), opt);
  if (const auto* m = bipartite_matching_system(sys)) {
    const auto colors = m->graph().bipartition();
    const auto per_size =
        bipartite_per_size(m->graph(), w.values(),
                           all_elements(sys.ground_size()), *colors);
    // Ties go to the larger cardinality.
    std::size_t arg = 0;
    for (std::size_t i = 1; i < per_size.size(); ++i)
      if (per_size[i].first >= per_size[arg].first) arg = i;
    return {per_size[arg].second, per_size[arg].first};
  }
  check_cap(sys, opt.enumeration_cap);  // throws
  return {};
}

// ---------------------------------------------------------------------------
// Lexicographic maximization
// ---------------------------------------------------------------------------

std::vector<Quad> lex_surrogate(const Weighting& w,
                                std::span<const int> candidates) {
  std::vector<Quad> distinct;
  distinct.reserve(candidates.size());
  for (int e : candidates) distinct.push_back(w[e]);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());

  const Quad base(w.size() + 1);
  std::vector<Quad> powers(distinct.size() + 1);
  powers[0] = Quad(1);
  for (std::size_t r = 1; r <= distinct.size(); ++r)
    powers[r] = powers[r - 1] * base * base;

  std::vector<Quad> surrogate(static_cast<size_t>(w.size()));
  for (int e : candidates) {
    const auto it = std::lower_bound(distinct.begin(), distinct.end(), w[e]);
    const std::size_t rank = static_cast<std::size_t>(it - distinct.begin()) + 1;
    surrogate[static_cast<size_t>(e)] = powers[rank];
  }
  return surrogate;
}

int compare_lex_keys(std::span<const int> a, std::span<const int> b,
                     const Weighting& w) {
  const std::vector<int> oa = order_by_weight(a, w);
  const std::vector<int> ob = order_by_weight(b, w);
  for (std::size_t i = 0; i < std::min(oa.size(), ob.size()); ++i) {
    const auto cmp = w[oa[i]] <=> w[ob[i]];
    if (cmp > 0) return 1;
    if (cmp < 0) return -1;
  }
  if (oa.size() != ob.size()) return oa.size() > ob.size() ? 1 : -1;
  return 0;
}

namespace {

struct LexSearch {
  const IndependenceSystem& sys;
  std::span<const Quad> surrogate;
  std::span<const int> candidates;
  ElemSet best_set;
  Quad best_value{-1};

  void run(ElemSet& current, Quad& value, std::size_t next) {
    if (value > best_value) {
      best_value = value;
      best_set = current;
    }
    for (std::size_t i = next; i < candidates.size(); ++i) {
      const int e = candidates[i];
      ElemSet ext = current;
      ext.insert(std::lower_bound(ext.begin(), ext.end(), e), e);
      if (!sys.is_independent(ext)) continue;
      current.swap(ext);
      value += surrogate[static_cast<size_t>(e)];
      run(current, value, i + 1);
      value -= surrogate[static_cast<size_t>(e)];
      current.swap(ext);
    }
  }
};

}  // namespace

ElemSet lex_max(const IndependenceSystem& sys, const Weighting& w,
                std::span<const int> candidates, const SolveOptions& opt) {
  check_weights(sys, w);
  const std::vector<Quad> surrogate = lex_surrogate(w, candidates);

  if (sys.ground_size() <= opt.enumeration_cap) {
    LexSearch search{sys, surrogate, candidates, {}, Quad(-1)};
    ElemSet current;
    Quad value;
    search.run(current, value, 0);
    return search.best_set;
  }
  if (const auto* m = bipartite_matching_system(sys)) {
    // Surrogate gains are monotone non-increasing (matchings are concave),
    // so the maximum total is reached when the gain turns negative.
    const auto colors = m->graph().bipartition();
    BipartiteMatcher matcher(m->graph(), surrogate, candidates, *colors);
    ElemSet best = matcher.matching();
    while (auto gain = matcher.augment_once()) {
      if (gain->sign() <= 0) break;
      best = matcher.matching();
    }
    return best;
  }
  check_cap(sys, opt.enumeration_cap);  // throws
  return {};
}

ElemSet lex_max(const IndependenceSystem& sys, const Weighting& w,
                const SolveOptions& opt) {
  const std::vector<int> ids = all_elements(sys.ground_size());
  return lex_max(sys, w, ids, opt);
}

ElemSet greedy(const IndependenceSystem& sys, const Weighting& w) {
  check_weights(sys, w);
  const std::vector<int> order =
      order_by_weight(all_elements(sys.ground_size()), w);
  ElemSet picked;
  for (int e : order) {
    ElemSet ext = picked;
    ext.insert(std::lower_bound(ext.begin(), ext.end(), e), e);
    if (sys.is_independent(ext)) picked = std::move(ext);
  }
  return picked;
}

}  // namespace rmatch
