#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "liaison/errors.hpp"

namespace liaison {

/// Exact-rational primal simplex for
///     maximize c.x  subject to  A x <= b,  x >= 0,
/// with b >= 0 (the slack basis is feasible). Bland's rule, so termination
/// is guaranteed; everything is mpq, so the optimum is exact and attained at
/// a basic solution.
struct SimplexResult {
  bool bounded;
  mpq_class value;                  // meaningful when bounded
  std::vector<mpq_class> solution;  // structural variables only
};

inline SimplexResult simplex_maximize(const std::vector<std::vector<mpq_class>>& A,
                                      const std::vector<mpq_class>& b,
                                      const std::vector<mpq_class>& c) {
  const std::size_t m = A.size();
  const std::size_t n = c.size();
  for (const auto& row : A)
    if (row.size() != n) throw value_error("simplex: ragged constraint matrix");
  if (b.size() != m) throw value_error("simplex: rhs size mismatch");
  for (const auto& v : b)
    if (v < 0) throw value_error("simplex: rhs must be nonnegative");

  // Tableau over columns [structural 0..n) [slack n..n+m), plus rhs.
  std::vector<std::vector<mpq_class>> T(m, std::vector<mpq_class>(n + m + 1, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) T[i][j] = A[i][j];
    T[i][n + i] = 1;
    T[i][n + m] = b[i];
  }
  std::vector<mpq_class> cost(n + m, 0);  // reduced costs
  for (std::size_t j = 0; j < n; ++j) cost[j] = c[j];
  mpq_class z = 0;
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  while (true) {
    // Bland: entering column = lowest index with positive reduced cost.
    std::size_t enter = n + m;
    for (std::size_t j = 0; j < n + m; ++j) {
      if (cost[j] > 0) {
        enter = j;
        break;
      }
    }
    if (enter == n + m) break;  // optimal

    // Ratio test; Bland tie-break on the smallest basic variable index.
    std::size_t leave = m;
    mpq_class best_ratio = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      mpq_class ratio = T[i][n + m] / T[i][enter];
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) return {false, 0, {}};  // unbounded direction

    // Pivot on (leave, enter).
    mpq_class piv = T[leave][enter];
    for (auto& v : T[leave]) v /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      mpq_class f = T[i][enter];
      for (std::size_t j = 0; j <= n + m; ++j) T[i][j] -= f * T[leave][j];
    }
    mpq_class cf = cost[enter];
    for (std::size_t j = 0; j < n + m; ++j) cost[j] -= cf * T[leave][j];
    z += cf * T[leave][n + m];
    basis[leave] = enter;
  }

  std::vector<mpq_class> x(n, 0);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = T[i][n + m];
  return {true, z, std::move(x)};
}

}  // namespace liaison
