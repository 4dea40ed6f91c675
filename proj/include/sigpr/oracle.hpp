#pragma once

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sigpr/graph.hpp"

namespace sigpr {

enum class Normalization { SumsToOne, SumsToN };

struct ScoreVector {
  std::vector<double> values;
  Normalization normalization = Normalization::SumsToOne;

  double sum() const;
  double operator[](std::size_t i) const { return values[i]; }
  std::size_t size() const { return values.size(); }
};

class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(std::size_t iterations, double residual);
  double residual() const { return residual_; }

 private:
  double residual_;
};

struct OracleOptions {
  double tol = 1e-10;
  std::size_t max_iter = 100000;
};

/// Personalized PageRank row of `source` by power iteration on
/// x = alpha * 1_source + (1 - alpha) * x * D^-1 A, stopping when the l1
/// residual drops to `tol`.
ScoreVector exact_ppr_row(const DirectedGraph& g, NodeId source, double alpha, OracleOptions opts = {});

/// PageRank normalized to sum to n (column sums of the PPR matrix).
ScoreVector exact_pagerank(const DirectedGraph& g, double alpha, OracleOptions opts = {});

/// Contribution of walks with at most k moves:
/// alpha * 1_source * sum_{i<=k} ((1 - alpha) D^-1 A)^i.
ScoreVector truncated_ppr_row(const DirectedGraph& g, NodeId source, double alpha, std::size_t k);

/// One step of x -> x * D^-1 A with the dangling rule applied.
std::vector<double> propagate(const DirectedGraph& g, const std::vector<double>& x);

double l1_distance(const std::vector<double>& a, const std::vector<double>& b);

void write_scores_tsv(const ScoreVector& s, std::ostream& out);
void write_scores_json(const ScoreVector& s, double alpha, std::ostream& out);

}  // namespace sigpr
