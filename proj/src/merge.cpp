#include "rmatch/merge.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

namespace rmatch {

namespace {

void require_matching(const ElemSet& m, const WeightedGraph& g,
                      const char* name) {
  if (!is_canonical_set(m) ||
      (!m.empty() && (m.front() < 0 || m.back() >= g.edge_count())))
    throw std::invalid_argument(std::string(name) + ": bad edge ids");
  std::vector<char> used(static_cast<size_t>(g.n_vertices), 0);
  for (int e : m) {
    const auto& [u, v] = g.edges[e];
    if (used[static_cast<size_t>(u)]++ || used[static_cast<size_t>(v)]++)
      throw std::invalid_argument(std::string(name) + ": not a matching");
  }
}

}  // namespace

ComponentDecomposition decompose(const ElemSet& m, const ElemSet& mp,
                                 const WeightedGraph& g) {
  require_matching(m, g, "M");
  require_matching(mp, g, "M'");

  ComponentDecomposition out;
  out.common = set_intersection(m, mp);
  const ElemSet diff = set_symmetric_difference(m, mp);

  std::vector<std::vector<int>> at(static_cast<size_t>(g.n_vertices));
  for (int e : diff) {
    at[static_cast<size_t>(g.edges[e].first)].push_back(e);
    at[static_cast<size_t>(g.edges[e].second)].push_back(e);
  }

  std::vector<char> seen(static_cast<size_t>(g.edge_count()), 0);
  auto next_edge = [&](int vertex, int arrived_by) -> int {
    for (int e : at[static_cast<size_t>(vertex)])
      if (e != arrived_by && !seen[static_cast<size_t>(e)]) return e;
    return -1;
  };

  for (int e0 : diff) {
    if (seen[static_cast<size_t>(e0)]) continue;

    // Walk both ways from e0 to find the component's extent.
    std::vector<int> walk{e0};
    seen[static_cast<size_t>(e0)] = 1;
    int head = g.edges[e0].first;
    int tail = g.edges[e0].second;
    for (int e = next_edge(tail, e0); e != -1; e = next_edge(tail, e)) {
      seen[static_cast<size_t>(e)] = 1;
      walk.push_back(e);
      tail = g.edges[e].first == tail ? g.edges[e].second : g.edges[e].first;
    }
    bool is_cycle = false;
    if (tail == head && walk.size() > 1) {
      is_cycle = true;
    } else {
      for (int e = next_edge(head, e0); e != -1; e = next_edge(head, e)) {
        seen[static_cast<size_t>(e)] = 1;
        walk.insert(walk.begin(), e);
        head = g.edges[e].first == head ? g.edges[e].second : g.edges[e].first;
      }
    }

    // Deterministic orientation: paths start at the endpoint whose edge has
    // the smaller id; cycles are rotated to start at the smallest edge id,
    // walking toward the smaller neighbor id.
    ComponentDecomposition::Component comp;
    comp.is_cycle = is_cycle;
    if (is_cycle) {
      const auto it = std::min_element(walk.begin(), walk.end());
      std::rotate(walk.begin(), it, walk.end());
      if (walk.size() > 2 && walk.back() < walk[1]) {
        std::reverse(walk.begin() + 1, walk.end());
      }
      comp.edges = std::move(walk);
    } else {
      if (walk.front() > walk.back())
        std::reverse(walk.begin(), walk.end());
      comp.edges = std::move(walk);
    }
    out.components.push_back(std::move(comp));
  }

  std::sort(out.components.begin(), out.components.end(),
            [](const auto& a, const auto& b) {
              return *std::min_element(a.edges.begin(), a.edges.end()) <
                     *std::min_element(b.edges.begin(), b.edges.end());
            });
  return out;
}

MergeParams MergeParams::make(const Rational& delta, int K) {
  if (delta <= 0 || delta >= 1)
    throw std::invalid_argument("delta must lie in (0, 1)");
  if (K < 1) throw std::invalid_argument("K must be at least 1");
  MergeParams p;
  p.delta = delta;
  p.K = K;
  p.d1 = Rational(18) / delta + 3;
  p.d3 = Rational(6) / delta + 2;
  p.delta_prime = delta / 3;

  const Rational ratio = p.delta_prime / (1 + p.delta_prime);
  const bool integral = denominator(p.d1) == 1;
  const BigInt d1_int = numerator(p.d1);
  if (integral && d1_int <= 4096) {
    const auto e1 = d1_int.convert_to<unsigned>();
    p.d2 = pow(d1_int, e1 + 4);
    p.beta = Rational(pow(numerator(ratio), e1), pow(denominator(ratio), e1));
  } else {
    // Sentinel branch: D2 = +infinity and a power-of-two lower bound on
    // beta; both only loosen constants the proof wants "sufficiently large".
    p.d2 = std::nullopt;
    const double log2beta =
        p.d1.convert_to<double>() * std::log2(ratio.convert_to<double>());
    const long shift = static_cast<long>(std::ceil(-log2beta)) + 1;
    p.beta = Rational(1, BigInt(1) << static_cast<unsigned>(shift));
  }
  p.gamma = p.beta / (p.d1 * p.d3);
  return p;
}

// ---------------------------------------------------------------------------
// simplify_pair
// ---------------------------------------------------------------------------

namespace {

// Mutable matching with per-vertex mate lookup.
struct Mutable {
  const WeightedGraph& g;
  std::vector<char> in;
  std::vector<int> mate;  // vertex -> edge id or -1

  Mutable(const ElemSet& m, const WeightedGraph& graph)
      : g(graph),
        in(static_cast<size_t>(graph.edge_count()), 0),
        mate(static_cast<size_t>(graph.n_vertices), -1) {
    for (int e : m) insert(e);
  }
  bool contains(int e) const { return in[static_cast<size_t>(e)] != 0; }
  void insert(int e) {
    in[static_cast<size_t>(e)] = 1;
    mate[static_cast<size_t>(g.edges[e].first)] = e;
    mate[static_cast<size_t>(g.edges[e].second)] = e;
  }
  void erase(int e) {
    in[static_cast<size_t>(e)] = 0;
    if (mate[static_cast<size_t>(g.edges[e].first)] == e)
      mate[static_cast<size_t>(g.edges[e].first)] = -1;
    if (mate[static_cast<size_t>(g.edges[e].second)] == e)
      mate[static_cast<size_t>(g.edges[e].second)] = -1;
  }
  ElemSet to_set() const {
    ElemSet out;
    for (int e = 0; e < g.edge_count(); ++e)
      if (in[static_cast<size_t>(e)]) out.push_back(e);
    return out;
  }
};

std::vector<Quad> prefix_desc(const ElemSet& s, const Weighting& w) {
  const std::vector<int> order = order_by_weight(s, w);
  std::vector<Quad> prefix(order.size() + 1);
  for (std::size_t i = 0; i < order.size(); ++i)
    prefix[i + 1] = prefix[i] + w[order[i]];
  return prefix;
}

const Quad& prefix_at(const std::vector<Quad>& prefix, int k) {
  const int top = static_cast<int>(prefix.size()) - 1;
  return prefix[static_cast<size_t>(k < top ? k : top)];
}

[[noreturn]] void bullet_failure(const char* which) {
  throw std::logic_error(std::string("simplify_pair postcondition failed: ") +
                         which);
}

}  // namespace

std::pair<ElemSet, ElemSet> simplify_pair(const ElemSet& m, const ElemSet& mp,
                                          const WeightedGraph& g,
                                          const Weighting& w,
                                          const MergeParams& params) {
  require_matching(m, g, "M");
  require_matching(mp, g, "M'");

  Mutable ma(m, g);
  Mutable mb(mp, g);

  // --- Transformation 1: heavy edges absorb or erase much lighter
  // neighbors. Edges of the original symmetric difference are processed in
  // non-increasing weight order (ties by id).
  {
    ElemSet snapshot = set_symmetric_difference(m, mp);
    std::vector<int> order = order_by_weight(snapshot, w);
    const Rational threshold =
        params.delta_prime / (1 + params.delta_prime);
    for (int e : order) {
      const bool in_a = ma.contains(e);
      const bool in_b = mb.contains(e);
      if (in_a == in_b) continue;  // removed earlier or became common
      Mutable& other = in_a ? mb : ma;
      const auto& [u, v] = g.edges[e];
      int n1 = other.mate[static_cast<size_t>(u)];
      int n2 = other.mate[static_cast<size_t>(v)];
      Quad w1 = n1 == -1 ? Quad(0) : w[n1];
      Quad w2 = n2 == -1 ? Quad(0) : w[n2];
      if (w1 > w2 || (w1 == w2 && n1 > n2)) {
        std::swap(n1, n2);
        std::swap(w1, w2);
      }
      if (w[e] >= w1 + w2) {
        if (n1 != -1) other.erase(n1);
        if (n2 != -1) other.erase(n2);
        other.insert(e);
      } else if (w1 <= Quad(threshold) * w[e]) {
        if (n1 != -1) other.erase(n1);
      }
    }
  }

  // --- Transformation 2: long components are cut into bounded subpaths by
  // dropping the lightest edge of each full block (ties by smallest id).
  {
    const Rational limit = Rational(6) / params.delta_prime + 3;
    const Rational block_len = Rational(2) / params.delta_prime;
    const BigInt block =
        numerator(block_len) / denominator(block_len) +
        (denominator(block_len) == 1 ? 0 : 1);  // ceil
    const long block_size = block.convert_to<long>();
    const auto decomp = decompose(ma.to_set(), mb.to_set(), g);
    for (const auto& comp : decomp.components) {
      if (Rational(static_cast<long>(comp.edges.size())) <= limit) continue;
      const long rest =
          static_cast<long>(comp.edges.size()) % block_size;
      for (std::size_t start = static_cast<size_t>(rest);
           start < comp.edges.size(); start += static_cast<size_t>(block_size)) {
        int victim = comp.edges[start];
        for (std::size_t i = start + 1;
             i < start + static_cast<size_t>(block_size); ++i) {
          const int e = comp.edges[i];
          if (w[e] < w[victim] || (w[e] == w[victim] && e < victim))
            victim = e;
        }
        (ma.contains(victim) ? ma : mb).erase(victim);
      }
    }
  }

  // --- Transformation 3: swap away components that dominate the weight of
  // either top-K set. Quantities are recomputed after every swap.
  for (;;) {
    const ElemSet sa = ma.to_set();
    const ElemSet sb = mb.to_set();
    const ElemSet ka = top_k(sa, w, params.K);
    const ElemSet kb = top_k(sb, w, params.K);
    const Quad wka = w.sum(ka);
    const Quad wkb = w.sum(kb);
    const auto decomp = decompose(sa, sb, g);
    const ComponentDecomposition::Component* hit = nullptr;
    for (const auto& comp : decomp.components) {
      Quad ca, cb;
      for (int e : comp.edges) {
        if (set_contains(ka, e)) ca += w[e];
        if (set_contains(kb, e)) cb += w[e];
      }
      const Quad scale = Quad(params.gamma) * Quad(params.K);
      if (scale * ca > wka || scale * cb > wkb) {
        hit = &comp;
        break;
      }
    }
    if (hit == nullptr) break;
    Quad in_a, in_b;
    for (int e : hit->edges) (ma.contains(e) ? in_a : in_b) += w[e];
    Mutable& flip = in_a >= in_b ? mb : ma;
    Mutable& source = in_a >= in_b ? ma : mb;
    for (int e : hit->edges) {
      if (flip.contains(e))
        flip.erase(e);
    }
    for (int e : hit->edges) {
      if (source.contains(e)) flip.insert(e);
    }
  }

  const ElemSet out_a = ma.to_set();
  const ElemSet out_b = mb.to_set();

  // --- Postconditions, hard-asserted.
  const std::vector<Quad> pa = prefix_desc(out_a, w);
  const std::vector<Quad> pb = prefix_desc(out_b, w);
  const std::vector<Quad> pm = prefix_desc(m, w);
  const std::vector<Quad> pmp = prefix_desc(mp, w);
  const Quad keep = Quad(1) - Quad(params.delta);
  const int top_k_bound = std::max(
      params.K,
      static_cast<int>(std::max(
          {m.size(), mp.size(), out_a.size(), out_b.size(), size_t(1)})));
  for (int k = params.K; k <= top_k_bound; ++k) {
    if (prefix_at(pa, k) < keep * prefix_at(pm, k)) bullet_failure("(a) on M");
    if (prefix_at(pb, k) < keep * prefix_at(pmp, k))
      bullet_failure("(a) on M'");
    const Quad d3(params.d3);
    if (d3 * prefix_at(pa, k) < prefix_at(pb, k)) bullet_failure("(c) lower");
    if (d3 * prefix_at(pb, k) < prefix_at(pa, k)) bullet_failure("(c) upper");
  }
  {
    const auto decomp = decompose(out_a, out_b, g);
    const Quad min_k =
        std::min(prefix_at(pa, params.K), prefix_at(pb, params.K));
    for (const auto& comp : decomp.components) {
      if (Rational(static_cast<long>(comp.edges.size())) > params.d1)
        bullet_failure("(b) cardinality");
      if (params.d2) {
        Quad total;
        for (int e : comp.edges) total += w[e];
        if (total * Quad(params.K) > Quad(Rational(*params.d2)) * min_k)
          bullet_failure("(b) weight");
      }
    }
  }
  return {out_a, out_b};
}

// ---------------------------------------------------------------------------
// random_merge
// ---------------------------------------------------------------------------

MergeStats random_merge(const ElemSet& mbar, const ElemSet& mbarp,
                        const WeightedGraph& g, const Weighting& w, double mu,
                        int K, int samples, std::uint64_t seed) {
  if (mu < 0 || mu > 1) throw std::invalid_argument("mu must lie in [0, 1]");
  if (samples < 1) throw std::invalid_argument("samples must be positive");
  if (K < 1) throw std::invalid_argument("K must be at least 1");
  const auto decomp = decompose(mbar, mbarp, g);

  const int max_k = static_cast<int>(std::max(mbar.size(), mbarp.size()));
  const int kcap = std::max(max_k, 1);

  // entry[e] = smallest k with e in Mbar_k or Mbar'_k (INT_MAX if neither).
  std::vector<int> entry(static_cast<size_t>(g.edge_count()),
                         std::numeric_limits<int>::max());
  for (const ElemSet* s : {&mbar, &mbarp}) {
    const std::vector<int> order = order_by_weight(*s, w);
    for (std::size_t i = 0; i < order.size(); ++i)
      entry[static_cast<size_t>(order[i])] =
          std::min(entry[static_cast<size_t>(order[i])],
                   static_cast<int>(i) + 1);
  }

  MergeStats stats;
  stats.samples = samples;
  stats.target.assign(static_cast<size_t>(kcap) + 1, 0.0);
  stats.wstar_mean.assign(static_cast<size_t>(kcap) + 1, 0.0);
  stats.wstar_var.assign(static_cast<size_t>(kcap) + 1, 0.0);
  const std::vector<Quad> pa = prefix_desc(mbar, w);
  const std::vector<Quad> pb = prefix_desc(mbarp, w);
  for (int k = 1; k <= kcap; ++k)
    stats.target[static_cast<size_t>(k)] =
        mu * prefix_at(pa, k).to_double() +
        (1 - mu) * prefix_at(pb, k).to_double();

  std::mt19937_64 rng(seed);
  std::vector<double> mean(static_cast<size_t>(kcap) + 1, 0.0);
  std::vector<double> m2v(static_cast<size_t>(kcap) + 1, 0.0);

  double best_ratio = -1;
  for (int s = 0; s < samples; ++s) {
    ElemSet star = decomp.common;
    for (const auto& comp : decomp.components) {
      const double r =
          static_cast<double>(rng() >> 11) * 0x1.0p-53;
      const bool take_a = r < mu;
      for (int e : comp.edges) {
        const bool in_a = set_contains(mbar, e);
        if (in_a == take_a) star.push_back(e);
      }
    }
    star = canonical_set(std::move(star));
    require_matching(star, g, "merged sample");

    // Welford update of W*_k = w(star cap (Mbar_k u Mbar'_k)).
    std::vector<double> wstar(static_cast<size_t>(kcap) + 1, 0.0);
    for (int e : star) {
      const int at = entry[static_cast<size_t>(e)];
      if (at <= kcap) wstar[static_cast<size_t>(at)] += w[e].to_double();
    }
    for (int k = 1; k <= kcap; ++k)
      wstar[static_cast<size_t>(k)] += wstar[static_cast<size_t>(k) - 1];
    for (int k = 1; k <= kcap; ++k) {
      const double x = wstar[static_cast<size_t>(k)];
      const double d = x - mean[static_cast<size_t>(k)];
      mean[static_cast<size_t>(k)] += d / (s + 1);
      m2v[static_cast<size_t>(k)] +=
          d * (x - mean[static_cast<size_t>(k)]);
    }

    // Min ratio over k >= K of w(star_k) / target_k.
    const std::vector<Quad> ps = prefix_desc(star, w);
    double ratio = std::numeric_limits<double>::infinity();
    for (int k = K; k <= std::max(K, kcap); ++k) {
      const double target = k <= kcap
                                ? stats.target[static_cast<size_t>(k)]
                                : stats.target[static_cast<size_t>(kcap)];
      if (target <= 0) continue;
      ratio = std::min(ratio, prefix_at(ps, k).to_double() / target);
    }
    if (!std::isfinite(ratio)) ratio = 1.0;
    if (ratio > best_ratio) {
      best_ratio = ratio;
      stats.best = star;
    }
  }
  stats.best_min_ratio = best_ratio;
  for (int k = 1; k <= kcap; ++k) {
    stats.wstar_mean[static_cast<size_t>(k)] = mean[static_cast<size_t>(k)];
    stats.wstar_var[static_cast<size_t>(k)] =
        samples > 1 ? m2v[static_cast<size_t>(k)] / (samples - 1) : 0.0;
  }
  return stats;
}

}  // namespace rmatch
