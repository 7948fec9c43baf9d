#include "rmatch/robust.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rmatch {

void RandomizedSolution::validate(const IndependenceSystem& sys) const {
  if (support.empty())
    throw std::invalid_argument("empty distribution support");
  Quad total;
  for (const Entry& entry : support) {
    if (entry.prob.sign() <= 0)
      throw std::invalid_argument("non-positive probability in support");
    if (!sys.is_independent_checked(entry.set))
      throw std::invalid_argument("support set is not independent");
    total += entry.prob;
  }
  if (total != Quad(1))
    throw std::invalid_argument("probabilities do not sum to 1");
}

void PriorityDistribution::validate() const {
  if (mass.empty()) throw std::invalid_argument("empty cardinality distribution");
  Quad total;
  int prev = 0;
  for (const auto& [k, p] : mass) {
    if (k <= prev) throw std::invalid_argument("cardinalities must be increasing");
    if (p.sign() <= 0) throw std::invalid_argument("non-positive mass");
    prev = k;
    total += p;
  }
  if (total != Quad(1))
    throw std::invalid_argument("cardinality masses do not sum to 1");
}

namespace {

// Weights of s in decreasing order, summed: prefix[k] = w(s_k).
std::vector<Quad> topk_prefix(const ElemSet& s, const Weighting& w) {
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

// rows = (achieved, opt) per k = 1..r
RobustnessReport report_from(const std::vector<std::pair<Quad, Quad>>& rows) {
  RobustnessReport rep;
  rep.alpha = Quad(1);
  rep.argmin_k = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const int k = static_cast<int>(i) + 1;
    const auto& [got, opt] = rows[i];
    RobustnessReport::PerK row;
    row.k = k;
    row.achieved = got;
    row.opt = opt;
    row.ratio = opt.sign() > 0 ? got / opt : Quad(1);
    if (opt.sign() > 0 && (rep.argmin_k == 0 || row.ratio < rep.alpha)) {
      rep.alpha = row.ratio;
      rep.argmin_k = k;
    }
    rep.per_k.push_back(std::move(row));
  }
  return rep;
}

}  // namespace

ElemSet squared_weight_solution(const IndependenceSystem& sys,
                                const Weighting& w, const SolveOptions& opt) {
  std::vector<Quad> squared;
  squared.reserve(static_cast<size_t>(w.size()));
  for (const Quad& q : w.values()) squared.push_back(q * q);
  return max_weight_set(sys, Weighting(std::move(squared)), opt).first;
}

RobustnessReport robustness(const IndependenceSystem& sys, const Weighting& w,
                            const ElemSet& s, const SolveOptions& opt) {
  if (!sys.is_independent_checked(s))
    throw std::invalid_argument("set is not independent");
  const OptProfile profile = opt_profile(sys, w, opt);
  const std::vector<Quad> prefix = topk_prefix(s, w);
  std::vector<std::pair<Quad, Quad>> rows;
  for (int k = 1; k <= profile.max_size(); ++k)
    rows.emplace_back(prefix_at(prefix, k), profile.at(k));
  return report_from(rows);
}

RobustnessReport randomized_robustness(const IndependenceSystem& sys,
                                       const Weighting& w,
                                       const RandomizedSolution& lam,
                                       const SolveOptions& opt) {
  lam.validate(sys);
  const OptProfile profile = opt_profile(sys, w, opt);
  std::vector<std::vector<Quad>> prefixes;
  prefixes.reserve(lam.support.size());
  for (const auto& entry : lam.support)
    prefixes.push_back(topk_prefix(entry.set, w));
  std::vector<std::pair<Quad, Quad>> rows;
  for (int k = 1; k <= profile.max_size(); ++k) {
    Quad expected;
    for (std::size_t i = 0; i < lam.support.size(); ++i)
      expected += lam.support[i].prob * prefix_at(prefixes[i], k);
    rows.emplace_back(std::move(expected), profile.at(k));
  }
  return report_from(rows);
}

Weighting rounded_weights(const Weighting& w, const Rational& x) {
  if (x < 0 || x > 1) throw std::invalid_argument("x must lie in [0, 1]");
  std::vector<Quad> out;
  out.reserve(static_cast<size_t>(w.size()));
  for (const Quad& q : w.values()) {
    if (q.sign() <= 0)
      throw std::invalid_argument("rounded_weights requires positive weights");
    const Log2Parts parts = log2_parts(q);
    const long exp = parts.floor_log2 + (x <= parts.frac ? 0 : -1);
    out.push_back(Quad::pow2(exp));
  }
  return Weighting(std::move(out));
}

RandomizedSolution randomized_robust(const IndependenceSystem& sys,
                                     const Weighting& w,
                                     const SolveOptions& opt) {
  if (w.size() != sys.ground_size())
    throw std::invalid_argument("weighting size mismatch");
  std::vector<int> candidates;
  for (int e = 0; e < w.size(); ++e)
    if (w[e].sign() > 0) candidates.push_back(e);
  if (candidates.empty())
    throw std::invalid_argument("all weights are zero");

  std::vector<Log2Parts> parts;
  parts.reserve(candidates.size());
  std::vector<Rational> breaks{Rational(0)};
  for (int e : candidates) {
    parts.push_back(log2_parts(w[e]));
    breaks.push_back(parts.back().frac);
  }
  breaks.push_back(Rational(1));
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  std::map<ElemSet, Quad> merged;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const Rational& lo = breaks[i];
    const Rational& hi = breaks[i + 1];
    const Rational mid = (lo + hi) / 2;
    std::vector<Quad> bit(static_cast<size_t>(w.size()));
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const long exp =
          parts[c].floor_log2 + (mid <= parts[c].frac ? 0 : -1);
      bit[static_cast<size_t>(candidates[c])] = Quad::pow2(exp);
    }
    const ElemSet s = lex_max(sys, Weighting(std::move(bit)), candidates, opt);
    merged[s] += Quad(Rational(hi - lo));
  }

  RandomizedSolution lam;
  for (auto& [s, p] : merged) lam.support.push_back({s, std::move(p)});
  if (lam.support.size() > static_cast<size_t>(candidates.size()) + 1)
    throw std::logic_error("support exceeds |E|+1");
  return lam;
}

Quad priority_value(const ElemSet& s, const Weighting& w,
                    const PriorityDistribution& mu) {
  const std::vector<Quad> prefix = topk_prefix(s, w);
  Quad value;
  for (const auto& [k, p] : mu.mass) value += p * prefix_at(prefix, k);
  return value;
}

ElemSet priority_best_in_support(const RandomizedSolution& lam,
                                 const Weighting& w,
                                 const PriorityDistribution& mu) {
  if (lam.support.empty())
    throw std::invalid_argument("empty distribution support");
  mu.validate();
  const ElemSet* best = nullptr;
  Quad best_value;
  for (const auto& entry : lam.support) {
    Quad value = priority_value(entry.set, w, mu);
    if (best == nullptr || value > best_value) {
      best = &entry.set;
      best_value = std::move(value);
    }
  }
  return *best;
}

std::pair<PriorityDistribution, Quad> priorities_to_mu(
    const std::vector<Quad>& c) {
  if (c.empty()) throw std::invalid_argument("empty priority sequence");
  if (c.front().sign() <= 0)
    throw std::invalid_argument("c_1 must be positive");
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].sign() < 0) throw std::invalid_argument("negative priority");
    if (i > 0 && c[i] > c[i - 1])
      throw std::invalid_argument("priorities must be non-increasing");
  }
  const Quad scale = c.front();
  PriorityDistribution mu;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Quad next = i + 1 < c.size() ? c[i + 1] : Quad(0);
    const Quad p = (c[i] - next) / scale;
    if (p.sign() > 0) mu.mass.emplace_back(static_cast<int>(i) + 1, p);
  }
  mu.validate();
  return {std::move(mu), scale};
}

std::vector<Quad> mu_to_priorities(const PriorityDistribution& mu) {
  mu.validate();
  const int top = mu.mass.back().first;
  std::vector<Quad> c(static_cast<size_t>(top));
  Quad tail;
  auto it = mu.mass.rbegin();
  for (int k = top; k >= 1; --k) {
    if (it != mu.mass.rend() && it->first == k) {
      tail += it->second;
      ++it;
    }
    c[static_cast<size_t>(k) - 1] = tail;
  }
  return c;
}

}  // namespace rmatch
