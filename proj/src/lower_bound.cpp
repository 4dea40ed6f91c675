#include "sigpr/lower_bound.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "json.hpp"
#include "sigpr/generators.hpp"
#include "sigpr/query.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sigpr {

TargetSet::TargetSet(std::size_t n, std::span<const NodeId> nodes) : mask_(n, 0) {
  for (NodeId v : nodes) {
    if (v >= n) throw std::out_of_range("target node out of range");
    if (!mask_[v]) ++size_;
    mask_[v] = 1;
  }
  if (size_ == 0) throw std::invalid_argument("target set must be non-empty");
}

DiscoveryTrial jump_discovery_trial(const DirectedGraph& g, const TargetSet& target, std::uint64_t budget,
                                    std::uint64_t seed) {
  if (budget < 1) throw std::invalid_argument("budget must be at least 1");
  RngStream rng(seed, 0);
  QueryLedger ledger;
  DiscoveryTrial trial{0, false, budget};
  while (trial.queries_used < budget) {
    const NodeId v = jump(g, rng, ledger);
    ++trial.queries_used;
    if (target.contains(v)) {
      trial.found = true;
      break;
    }
  }
  return trial;
}

double LowerBoundSummary::found_rate_at(std::uint64_t b) const {
  if (queries.empty()) return 0.0;
  const auto hits = std::count_if(queries.begin(), queries.end(), [&](std::uint64_t q) { return q <= b; });
  return static_cast<double>(hits) / static_cast<double>(queries.size());
}

LowerBoundSummary run_lower_bound_experiment(std::size_t n, double delta, std::size_t trials, std::uint64_t seed,
                                             ExecPolicy exec) {
  if (trials == 0) throw std::invalid_argument("need at least one trial");
  const PathStar ps = gen_path_star(n, delta);
  std::vector<NodeId> star;
  for (NodeId v = ps.spec.hub_id; v < n; ++v) star.push_back(v);
  const TargetSet target(n, star);

  LowerBoundSummary s;
  s.n = n;
  s.delta = delta;
  s.d = ps.spec.d;
  s.trials = trials;
  s.budget = std::max<std::uint64_t>(1, n / (ps.spec.d + 1));
  s.search_cap = 100 * s.budget;
  s.hit_probability = static_cast<double>(ps.spec.d + 1) / static_cast<double>(n);
  s.expected_found_rate = 1.0 - std::pow(1.0 - s.hit_probability, static_cast<double>(s.budget));
  s.expected_mean_queries = 1.0 / s.hit_probability;
  s.queries.assign(trials, 0);

  const auto count = static_cast<std::int64_t>(trials);
#ifdef _OPENMP
  const int threads = exec.threads > 0 ? exec.threads : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(threads)
#else
  (void)exec;
#endif
  for (std::int64_t i = 0; i < count; ++i) {
    s.queries[i] = jump_discovery_trial(ps.graph, target, s.search_cap, stream_key(seed, i)).queries_used;
  }

  s.found_rate = s.found_rate_at(s.budget);
  s.mean_queries = std::accumulate(s.queries.begin(), s.queries.end(), 0.0) / static_cast<double>(trials);
  s.within_paper_band = std::abs(s.found_rate - (1.0 - std::exp(-1.0))) <= 0.05;

  std::vector<std::uint64_t> sorted = s.queries;
  std::sort(sorted.begin(), sorted.end());
  for (double q : {0.1, 0.25, 0.5, 0.75, 0.9, 0.99}) {
    const auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(trials)));
    s.quantiles[q] = static_cast<double>(sorted[std::max<std::size_t>(rank, 1) - 1]);
  }
  return s;
}

void write_lower_bound_json(const LowerBoundSummary& s, std::ostream& out) {
  nlohmann::json quantiles = nlohmann::json::object();
  for (const auto& [q, v] : s.quantiles) {
    char key[16];
    std::snprintf(key, sizeof key, "p%g", q * 100.0);
    quantiles[key] = v;
  }
  nlohmann::json j{{"n", s.n},
                   {"delta", s.delta},
                   {"d", s.d},
                   {"trials", s.trials},
                   {"budget", s.budget},
                   {"found_rate", s.found_rate},
                   {"expected_found_rate", s.expected_found_rate},
                   {"mean_queries", s.mean_queries},
                   {"expected_mean_queries", s.expected_mean_queries},
                   {"within_paper_band", s.within_paper_band},
                   {"quantiles", quantiles}};
  out << j.dump() << '\n';
}

}  // namespace sigpr
