#pragma once

#include "rmatch/robust.hpp"

#include <string>
#include <vector>

namespace rmatch {

// Payoff matrix of the cardinality game: rows are the candidate sets (by
// default the maximal independent sets), columns the cardinalities k with
// OPT_k > 0, entries w(S_k)/OPT_k in [0, 1].
struct GameMatrix {
  std::vector<ElemSet> rows;
  std::vector<int> cols;
  std::vector<std::vector<Quad>> payoff;
  OptProfile profile;
};

// Exact primal/dual optimum of the game. alpha_star == beta (the simplex
// runs over Q(sqrt 2), so the duality gap is exactly zero).
struct GameSolution {
  Quad alpha_star;
  Quad beta;
  RandomizedSolution alice;
  std::vector<std::pair<int, Quad>> bob;         // (k, y_k)
  std::vector<std::pair<int, Quad>> induced_mu;  // mu_k proportional to y_k/OPT_k
  Quad deterministic_best;  // best single-row guarantee
};

struct GameVerification {
  bool ok = false;
  std::vector<std::string> violations;
};

// maximal_only = false switches to the full-support formulation (all
// non-empty independent sets as rows); used for validation.
GameMatrix build_matrix(const IndependenceSystem& sys, const Weighting& w,
                        bool maximal_only = true, const SolveOptions& opt = {});

GameSolution solve_game(const GameMatrix& matrix);

// Re-derives feasibility of both strategies and the duality gap from
// scratch; tol absorbs float-borne inputs, exact solutions pass tol = 0.
GameVerification verify_solution(const GameMatrix& matrix,
                                 const GameSolution& sol,
                                 const Quad& tol = Quad::from_double(1e-9));

}  // namespace rmatch
