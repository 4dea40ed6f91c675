#pragma once

// Test-only helpers. The dense solver is an independent route to PPR values:
// it solves x (I - (1 - alpha) P) = alpha 1_v by Gaussian elimination and
// never touches the power-iteration code it is used to check.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "sigpr/graph.hpp"

namespace sigpr::testing {

inline std::vector<std::vector<double>> transition_matrix(const DirectedGraph& g) {
  const std::size_t n = g.num_nodes();
  std::vector<std::vector<double>> p(n, std::vector<double>(n, 0.0));
  for (NodeId u = 0; u < n; ++u) {
    const auto nbrs = g.out_neighbors(u);
    if (nbrs.empty()) {
      for (auto& x : p[u]) x = 1.0 / static_cast<double>(n);
    } else {
      for (NodeId v : nbrs) p[u][v] += 1.0 / static_cast<double>(nbrs.size());
    }
  }
  return p;
}

// Solves x M = b for row vector x, i.e. M^T x^T = b^T, with partial pivoting.
inline std::vector<double> solve_left(std::vector<std::vector<double>> m, std::vector<double> b) {
  const std::size_t n = b.size();
  std::vector<std::vector<double>> a(n, std::vector<double>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[j][i];
    a[i][n] = b[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    }
    std::swap(a[col], a[piv]);
    if (std::abs(a[col][col]) < 1e-300) throw std::runtime_error("singular system");
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

inline std::vector<double> dense_ppr_row(const DirectedGraph& g, NodeId v, double alpha) {
  const std::size_t n = g.num_nodes();
  auto p = transition_matrix(g);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) p[i][j] = (i == j ? 1.0 : 0.0) - (1.0 - alpha) * p[i][j];
  }
  std::vector<double> b(n, 0.0);
  b[v] = alpha;
  return solve_left(std::move(p), std::move(b));
}

inline std::vector<double> dense_pagerank(const DirectedGraph& g, double alpha) {
  const std::size_t n = g.num_nodes();
  auto p = transition_matrix(g);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) p[i][j] = (i == j ? 1.0 : 0.0) - (1.0 - alpha) * p[i][j];
  }
  return solve_left(std::move(p), std::vector<double>(n, alpha));
}

// Upper 1% critical value of the chi-square distribution via the
// Wilson-Hilferty approximation.
inline double chi_square_crit_99(double dof) {
  constexpr double z = 2.326347874;
  const double t = 2.0 / (9.0 * dof);
  return dof * std::pow(1.0 - t + z * std::sqrt(t), 3.0);
}

}  // namespace sigpr::testing
