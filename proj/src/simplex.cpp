#include "veto/simplex.hpp"

#include <cstddef>

namespace veto {

std::optional<std::vector<Rational>> find_nonnegative_solution(const std::vector<std::vector<Rational>>& A,
                                                               const std::vector<Rational>& b) {
  const std::size_t m = A.size();
  const std::size_t n = m == 0 ? 0 : A[0].size();
  if (m == 0) return std::vector<Rational>(n);

  // Tableau columns: n structural, m artificial, then the right-hand side.
  const std::size_t width = n + m + 1;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(width));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? Rational(-A[i][j]) : A[i][j];
    t[i][n + i] = 1;
    t[i][width - 1] = flip ? Rational(-b[i]) : b[i];
    basis[i] = n + i;
  }

  // Reduced costs for minimizing the artificial sum.
  std::vector<Rational> cost(width);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < width; ++j) {
      if (j < n || j == width - 1) cost[j] -= t[i][j];
    }
  }

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][width - 1] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // cannot happen in phase one: objective is bounded below by 0

    const Rational pivot = t[leave][enter];
    for (auto& x : t[leave]) x /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) {
        if (t[leave][j] != 0) t[i][j] -= f * t[leave][j];
      }
    }
    if (cost[enter] != 0) {
      const Rational f = cost[enter];
      for (std::size_t j = 0; j < width; ++j) {
        if (t[leave][j] != 0) cost[j] -= f * t[leave][j];
      }
    }
    basis[leave] = enter;
  }

  if (cost[width - 1] != 0) return std::nullopt;  // artificial sum stays positive
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) x[basis[i]] = t[i][width - 1];
  }
  return x;
}

}  // namespace veto
