#include "sigpr/oracle.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>

#include "json.hpp"

namespace sigpr {

double ScoreVector::sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }

NonConvergenceError::NonConvergenceError(std::size_t iterations, double residual)
    : std::runtime_error("power iteration did not converge after " + std::to_string(iterations) +
                         " iterations (residual " + std::to_string(residual) + ")"),
      residual_(residual) {}

std::vector<double> propagate(const DirectedGraph& g, const std::vector<double>& x) {
  const std::size_t n = g.num_nodes();
  std::vector<double> y(n, 0.0);
  double dangling_mass = 0.0;
  for (NodeId u = 0; u < n; ++u) {
    const double mass = x[u];
    if (mass == 0.0) continue;
    const auto nbrs = g.out_neighbors(u);
    if (nbrs.empty()) {
      dangling_mass += mass;
      continue;
    }
    const double share = mass / static_cast<double>(nbrs.size());
    for (NodeId v : nbrs) y[v] += share;
  }
  if (dangling_mass != 0.0) {
    const double share = dangling_mass / static_cast<double>(n);
    for (double& v : y) v += share;
  }
  return y;
}

double l1_distance(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d += std::abs(a[i] - b[i]);
  return d;
}

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0) && alpha != 1.0) {
    throw std::invalid_argument("alpha must lie in (0, 1]");
  }
}

// Iterates x <- restart + (1 - alpha) * x P until ||x - F(x)||_1 <= tol.
ScoreVector solve_fixed_point(const DirectedGraph& g, const std::vector<double>& restart, std::vector<double> x,
                              double alpha, OracleOptions opts, Normalization norm) {
  check_alpha(alpha);
  if (!(opts.tol > 0.0)) throw std::invalid_argument("tol must be positive");
  double residual = 0.0;
  for (std::size_t it = 0; it < opts.max_iter; ++it) {
    std::vector<double> next = propagate(g, x);
    for (std::size_t i = 0; i < next.size(); ++i) next[i] = restart[i] + (1.0 - alpha) * next[i];
    residual = l1_distance(next, x);
    x = std::move(next);
    if (residual <= opts.tol) return {std::move(x), norm};
  }
  throw NonConvergenceError(opts.max_iter, residual);
}

}  // namespace

ScoreVector exact_ppr_row(const DirectedGraph& g, NodeId source, double alpha, OracleOptions opts) {
  if (!g.contains(source)) throw std::out_of_range("source out of range");
  std::vector<double> restart(g.num_nodes(), 0.0);
  restart[source] = alpha;
  std::vector<double> start(g.num_nodes(), 0.0);
  start[source] = 1.0;
  return solve_fixed_point(g, restart, std::move(start), alpha, opts, Normalization::SumsToOne);
}

ScoreVector exact_pagerank(const DirectedGraph& g, double alpha, OracleOptions opts) {
  std::vector<double> restart(g.num_nodes(), alpha);
  std::vector<double> start(g.num_nodes(), 1.0);
  return solve_fixed_point(g, restart, std::move(start), alpha, opts, Normalization::SumsToN);
}

ScoreVector truncated_ppr_row(const DirectedGraph& g, NodeId source, double alpha, std::size_t k) {
  check_alpha(alpha);
  if (!g.contains(source)) throw std::out_of_range("source out of range");
  // term_i = alpha (1 - alpha)^i * 1_source P^i
  std::vector<double> term(g.num_nodes(), 0.0);
  term[source] = alpha;
  std::vector<double> total = term;
  for (std::size_t i = 1; i <= k; ++i) {
    term = propagate(g, term);
    for (std::size_t j = 0; j < term.size(); ++j) {
      term[j] *= 1.0 - alpha;
      total[j] += term[j];
    }
  }
  return {std::move(total), Normalization::SumsToOne};
}

void write_scores_tsv(const ScoreVector& s, std::ostream& out) {
  char buf[64];
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%zu\t%.12g\n", i, s.values[i]);
    out << buf;
  }
}

void write_scores_json(const ScoreVector& s, double alpha, std::ostream& out) {
  nlohmann::json j;
  j["alpha"] = alpha;
  j["normalization"] = s.normalization == Normalization::SumsToN ? "sums_to_n" : "sums_to_one";
  j["scores"] = s.values;
  out << j.dump() << '\n';
}

}  // namespace sigpr
