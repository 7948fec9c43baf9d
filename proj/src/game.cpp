#include "rmatch/game.hpp"

#include "rmatch/simplex.hpp"

#include <algorithm>
#include <stdexcept>

namespace rmatch {

GameMatrix build_matrix(const IndependenceSystem& sys, const Weighting& w,
                        bool maximal_only, const SolveOptions& opt) {
  GameMatrix m;
  m.profile = opt_profile(sys, w, opt);
  for (int k = 1; k <= m.profile.max_size(); ++k)
    if (m.profile.at(k).sign() > 0) m.cols.push_back(k);

  std::vector<ElemSet> sets =
      enumerate_independent(sys, maximal_only, opt.enumeration_cap);
  if (!maximal_only)
    std::erase_if(sets, [](const ElemSet& s) { return s.empty(); });
  m.rows = std::move(sets);

  m.payoff.reserve(m.rows.size());
  for (const ElemSet& s : m.rows) {
    const std::vector<int> order = order_by_weight(s, w);
    std::vector<Quad> prefix(order.size() + 1);
    for (std::size_t i = 0; i < order.size(); ++i)
      prefix[i + 1] = prefix[i] + w[order[i]];
    std::vector<Quad> row;
    row.reserve(m.cols.size());
    for (int k : m.cols) {
      const std::size_t idx =
          std::min(prefix.size() - 1, static_cast<std::size_t>(k));
      row.push_back(prefix[idx] / m.profile.at(k));
    }
    m.payoff.push_back(std::move(row));
  }
  return m;
}

GameSolution solve_game(const GameMatrix& matrix) {
  if (matrix.rows.empty() || matrix.cols.empty())
    throw std::invalid_argument("degenerate game matrix");

  // max 1^T v  s.t.  payoff * v <= 1, v >= 0. The optimum is 1/alpha*; Bob's
  // strategy is v normalized, Alice's the normalized dual prices.
  lp::Canonical prob;
  prob.A = matrix.payoff;
  prob.b.assign(matrix.rows.size(), Quad(1));
  prob.c.assign(matrix.cols.size(), Quad(1));
  const lp::Solution sol = lp::maximize(prob);
  if (sol.status != lp::Solution::Status::optimal || sol.value.sign() <= 0)
    throw std::logic_error("game LP did not reach a positive optimum");

  GameSolution out;
  out.alpha_star = Quad(1) / sol.value;
  out.beta = out.alpha_star;

  Quad dual_total;
  for (const Quad& u : sol.y) dual_total += u;
  for (std::size_t i = 0; i < matrix.rows.size(); ++i) {
    if (sol.y[i].sign() > 0)
      out.alice.support.push_back({matrix.rows[i], sol.y[i] / dual_total});
  }
  for (std::size_t j = 0; j < matrix.cols.size(); ++j) {
    if (sol.x[j].sign() > 0)
      out.bob.emplace_back(matrix.cols[j], sol.x[j] / sol.value);
  }

  // Bob's optimal y corresponds to a priority distribution via
  // y_k = mu_k OPT_k / sum_i mu_i OPT_i.
  Quad mu_total;
  std::vector<std::pair<int, Quad>> mu_raw;
  for (const auto& [k, y] : out.bob) {
    Quad m = y / matrix.profile.at(k);
    mu_total += m;
    mu_raw.emplace_back(k, std::move(m));
  }
  for (auto& [k, m] : mu_raw) out.induced_mu.emplace_back(k, m / mu_total);

  out.deterministic_best = Quad(0);
  for (const auto& row : matrix.payoff) {
    Quad worst = row.empty() ? Quad(0) : row.front();
    for (const Quad& entry : row)
      if (entry < worst) worst = entry;
    if (worst > out.deterministic_best) out.deterministic_best = worst;
  }
  return out;
}

GameVerification verify_solution(const GameMatrix& matrix,
                                 const GameSolution& sol, const Quad& tol) {
  GameVerification v;
  v.ok = true;
  auto fail = [&](std::string msg) {
    v.ok = false;
    v.violations.push_back(std::move(msg));
  };

  // Primal feasibility: Alice's strategy is a distribution over rows and
  // achieves alpha at every column.
  Quad total;
  for (const auto& entry : sol.alice.support) {
    if (entry.prob.sign() < 0) fail("negative probability in Alice's strategy");
    total += entry.prob;
  }
  if (abs(total - Quad(1)) > tol) fail("Alice's probabilities do not sum to 1");

  std::vector<std::size_t> row_of;
  row_of.reserve(sol.alice.support.size());
  for (const auto& entry : sol.alice.support) {
    const auto it =
        std::find(matrix.rows.begin(), matrix.rows.end(), entry.set);
    if (it == matrix.rows.end()) {
      fail("Alice plays a set that is not a matrix row");
      return v;
    }
    row_of.push_back(static_cast<std::size_t>(it - matrix.rows.begin()));
  }
  for (std::size_t j = 0; j < matrix.cols.size(); ++j) {
    Quad achieved;
    for (std::size_t i = 0; i < sol.alice.support.size(); ++i)
      achieved += sol.alice.support[i].prob * matrix.payoff[row_of[i]][j];
    if (achieved + tol < sol.alpha_star)
      fail("Alice falls short of alpha at k=" +
           std::to_string(matrix.cols[j]));
  }

  // Dual feasibility: Bob's strategy is a distribution over columns and
  // caps every row at beta.
  Quad ytotal;
  for (const auto& [k, y] : sol.bob) {
    if (y.sign() < 0) fail("negative probability in Bob's strategy");
    ytotal += y;
  }
  if (abs(ytotal - Quad(1)) > tol) fail("Bob's probabilities do not sum to 1");
  for (std::size_t i = 0; i < matrix.rows.size(); ++i) {
    Quad value;
    for (const auto& [k, y] : sol.bob) {
      const auto it = std::find(matrix.cols.begin(), matrix.cols.end(), k);
      if (it == matrix.cols.end()) {
        fail("Bob plays a cardinality outside the matrix");
        return v;
      }
      value += y * matrix.payoff[i][static_cast<std::size_t>(
                       it - matrix.cols.begin())];
    }
    if (value > sol.beta + tol)
      fail("Bob exceeds beta against row " + std::to_string(i));
  }

  if (abs(sol.alpha_star - sol.beta) > tol) fail("duality gap exceeds tolerance");
  return v;
}

}  // namespace rmatch
