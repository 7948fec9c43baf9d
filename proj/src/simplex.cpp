#include "rmatch/simplex.hpp"

#include <stdexcept>

namespace rmatch::lp {

Solution maximize(const Canonical& prob) {
  const int m = static_cast<int>(prob.A.size());
  const int n = static_cast<int>(prob.c.size());
  for (const auto& row : prob.A)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("ragged constraint matrix");
  if (static_cast<int>(prob.b.size()) != m)
    throw std::invalid_argument("rhs size mismatch");
  for (const Quad& bi : prob.b)
    if (bi.sign() < 0)
      throw std::invalid_argument("canonical form requires b >= 0");

  const int cols = n + m + 1;  // vars, slacks, rhs
  std::vector<std::vector<Quad>> t(static_cast<size_t>(m) + 1,
                                   std::vector<Quad>(cols));
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) t[i][j] = prob.A[i][j];
    t[i][n + i] = Quad(1);
    t[i][cols - 1] = prob.b[i];
    basis[i] = n + i;
  }
  for (int j = 0; j < n; ++j) t[m][j] = prob.c[j];

  for (;;) {
    // Bland: entering = smallest column with positive reduced cost.
    int s = -1;
    for (int j = 0; j < n + m; ++j) {
      if (t[m][j].sign() > 0) {
        s = j;
        break;
      }
    }
    if (s == -1) break;  // optimal

    // Leaving: minimum ratio, ties by smallest basis label.
    int r = -1;
    Quad best_ratio;
    for (int i = 0; i < m; ++i) {
      if (t[i][s].sign() <= 0) continue;
      Quad ratio = t[i][cols - 1] / t[i][s];
      if (r == -1 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[r])) {
        r = i;
        best_ratio = std::move(ratio);
      }
    }
    if (r == -1) {
      Solution sol;
      sol.status = Solution::Status::unbounded;
      return sol;
    }

    // Pivot on (r, s).
    const Quad pivot = t[r][s];
    for (int j = 0; j < cols; ++j) t[r][j] /= pivot;
    for (int i = 0; i <= m; ++i) {
      if (i == r || t[i][s].is_zero()) continue;
      const Quad factor = t[i][s];
      for (int j = 0; j < cols; ++j) t[i][j] -= factor * t[r][j];
    }
    basis[r] = s;
  }

  Solution sol;
  sol.value = -t[m][cols - 1];
  sol.x.assign(static_cast<size_t>(n), Quad(0));
  for (int i = 0; i < m; ++i)
    if (basis[i] < n) sol.x[static_cast<size_t>(basis[i])] = t[i][cols - 1];
  sol.y.resize(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) sol.y[static_cast<size_t>(i)] = -t[m][n + i];
  return sol;
}

}  // namespace rmatch::lp
