#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <vector>

#include "sigpr/graph.hpp"
#include "sigpr/local_ppr.hpp"

namespace sigpr {

struct DiscoveryTrial {
  std::uint64_t queries_used = 0;
  bool found = false;
  std::uint64_t budget = 0;
};

/// Membership mask over [0, n).
class TargetSet {
 public:
  TargetSet(std::size_t n, std::span<const NodeId> nodes);
  bool contains(NodeId v) const { return mask_[v] != 0; }
  std::size_t size() const { return size_; }

 private:
  std::vector<char> mask_;
  std::size_t size_ = 0;
};

/// Jumps until a target node comes up or `budget` jumps are spent.
DiscoveryTrial jump_discovery_trial(const DirectedGraph& g, const TargetSet& target, std::uint64_t budget,
                                    std::uint64_t seed);

struct LowerBoundSummary {
  std::size_t n = 0;
  double delta = 0.0;
  std::size_t d = 0;
  std::size_t trials = 0;
  std::uint64_t budget = 0;       // floor(n / (d + 1))
  std::uint64_t search_cap = 0;   // per-trial jump cap used to measure discovery time
  double hit_probability = 0.0;   // (d + 1) / n
  double found_rate = 0.0;        // fraction discovered within `budget`
  double expected_found_rate = 0.0;  // 1 - (1 - p)^budget
  double mean_queries = 0.0;      // mean discovery time
  double expected_mean_queries = 0.0;  // n / (d + 1)
  bool within_paper_band = false;  // |found_rate - (1 - 1/e)| <= 0.05
  std::map<double, double> quantiles;
  std::vector<std::uint64_t> queries;  // per-trial discovery time, trial order

  /// Fraction of trials that would succeed with the given jump budget.
  double found_rate_at(std::uint64_t budget) const;
};

/// Builds the path-star graph and measures how many jumps it takes to land in
/// the star. Each trial runs with a cap of 100 n/(d+1) jumps; success within
/// the nominal budget is read off the same jump sequence.
LowerBoundSummary run_lower_bound_experiment(std::size_t n, double delta, std::size_t trials, std::uint64_t seed,
                                             ExecPolicy exec = {});

void write_lower_bound_json(const LowerBoundSummary& s, std::ostream& out);

}  // namespace sigpr
