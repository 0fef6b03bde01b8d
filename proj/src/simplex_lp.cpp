#include "makai/simplex_lp.hpp"

#include <cmath>
#include <cstddef>
#include <limits>

#include "makai/errors.hpp"

namespace makai::lp {

Solution maximize(const std::vector<std::vector<double>>& A,
                  const std::vector<double>& b, const std::vector<double>& c) {
  const std::size_t m = A.size();
  const std::size_t n = c.size();
  for (double bi : b)
    if (bi < 0.0) throw LPFailure("rhs must be nonnegative for the slack basis");

  // tableau: m rows of [A | I | b], plus objective row [-c | 0 | 0]
  const std::size_t cols = n + m + 1;
  std::vector<std::vector<double>> T(m + 1, std::vector<double>(cols, 0.0));
  double scale = 1.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      T[i][j] = A[i][j];
      scale = std::max(scale, std::abs(A[i][j]));
    }
    T[i][n + i] = 1.0;
    T[i][cols - 1] = b[i];
    scale = std::max(scale, std::abs(b[i]));
  }
  for (std::size_t j = 0; j < n; ++j) T[m][j] = -c[j];

  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  const double eps = 1e-12 * scale;
  const std::size_t max_iter = 50 * (m + n) + 1000;
  for (std::size_t iter = 0;; ++iter) {
    if (iter > max_iter) throw LPFailure("simplex iteration cap");

    // Bland: entering = lowest-index improving column
    std::size_t enter = cols;
    for (std::size_t j = 0; j + 1 < cols; ++j)
      if (T[m][j] < -eps) {
        enter = j;
        break;
      }
    if (enter == cols) break;  // optimal

    // ratio test; ties broken by smallest basis variable index (Bland)
    std::size_t leave = m;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      if (T[i][enter] > eps) {
        double ratio = T[i][cols - 1] / T[i][enter];
        if (ratio < best - eps ||
            (ratio < best + eps && (leave == m || basis[i] < basis[leave]))) {
          best = ratio;
          leave = i;
        }
      }
    }
    if (leave == m) throw LPFailure("objective unbounded");

    double piv = T[leave][enter];
    for (std::size_t j = 0; j < cols; ++j) T[leave][j] /= piv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave) continue;
      double f = T[i][enter];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < cols; ++j) T[i][j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }

  Solution sol;
  sol.v.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) sol.v[basis[i]] = T[i][cols - 1];
  sol.value = 0.0;
  for (std::size_t j = 0; j < n; ++j) sol.value += c[j] * sol.v[j];
  return sol;
}

}  // namespace makai::lp
