#include "sigpr/local_ppr.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sigpr {

WalkOutcome simulate_walk(const DirectedGraph& g, NodeId source, double alpha, std::uint32_t cap, RngStream& rng,
                          QueryLedger& ledger) {
  if (cap < 1) throw std::invalid_argument("walk cap must be at least 1");
  NodeId at = source;
  for (std::uint32_t step = 1; step <= cap; ++step) {
    ++ledger.walk_steps;
    if (rng.uniform() < alpha) return {true, at, step};
    at = random_crawl(g, at, rng, ledger);
  }
  return {false, at, cap};
}

std::uint64_t walk_count(std::size_t n, const RowParams& p) {
  const double r = std::ceil(p.walks_const * std::log2(static_cast<double>(n)) / (p.epsilon * p.rho * p.rho));
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(r));
}

std::uint32_t walk_length_cap(double epsilon, double alpha) {
  if (alpha >= 1.0) return 1;
  const double len = std::ceil(std::log(4.0 / epsilon) / std::log(1.0 / (1.0 - alpha)));
  return std::max<std::uint32_t>(1, static_cast<std::uint32_t>(len));
}

double PprEstimate::value(NodeId u) const {
  const auto it = std::lower_bound(entries.begin(), entries.end(), u,
                                   [](const PprEntry& e, NodeId id) { return e.node < id; });
  return it != entries.end() && it->node == u ? it->value : 0.0;
}

bool PprEstimate::contains(NodeId u) const { return value(u) > 0.0; }

double PprEstimate::total() const {
  double s = 0.0;
  for (const auto& e : entries) s += e.value;
  return s;
}

namespace {

void check_params(const DirectedGraph& g, NodeId v, const RowParams& p) {
  if (!g.contains(v)) throw std::out_of_range("approx_row: source out of range");
  if (!(p.epsilon > 0.0 && p.epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
  if (!(p.rho > 0.0 && p.rho < 1.0)) throw std::invalid_argument("rho must lie in (0, 1)");
  if (!(p.alpha > 0.0 && p.alpha <= 1.0)) throw std::invalid_argument("alpha must lie in (0, 1]");
  if (!(p.walks_const > 0.0)) throw std::invalid_argument("walks_const must be positive");
}

PprEstimate make_header(NodeId v, const RowParams& p, std::uint64_t walks, std::uint32_t cap) {
  PprEstimate est;
  est.source = v;
  est.alpha = p.alpha;
  est.epsilon = p.epsilon;
  est.rho = p.rho;
  est.walks_run = walks;
  est.walk_length_cap = cap;
  return est;
}

constexpr NodeId kNoEnd = static_cast<NodeId>(-1);

// Turns the per-walk end nodes into sorted (node, count) entries.
void tally(std::vector<NodeId>& ends, PprEstimate& est) {
  std::sort(ends.begin(), ends.end());
  const double walks = static_cast<double>(est.walks_run);
  for (std::size_t i = 0; i < ends.size();) {
    if (ends[i] == kNoEnd) break;  // sorts last
    std::size_t j = i;
    while (j < ends.size() && ends[j] == ends[i]) ++j;
    const auto count = static_cast<std::uint64_t>(j - i);
    est.entries.push_back({ends[i], count, static_cast<double>(count) / walks});
    i = j;
  }
}

}  // namespace

namespace detail {

PprEstimate approx_row_single(const DirectedGraph& g, NodeId v, const RowParams& params, std::uint64_t seed,
                              QueryLedger& ledger, std::vector<NodeId>& scratch) {
  check_params(g, v, params);
  const std::uint64_t walks = walk_count(g.num_nodes(), params);
  const std::uint32_t cap = walk_length_cap(params.epsilon, params.alpha);
  PprEstimate est = make_header(v, params, walks, cap);
  scratch.clear();
  for (std::uint64_t w = 0; w < walks; ++w) {
    RngStream rng(seed, w);
    const WalkOutcome out = simulate_walk(g, v, params.alpha, cap, rng, ledger);
    if (out.terminated) scratch.push_back(out.last_node);
  }
  tally(scratch, est);
  return est;
}

}  // namespace detail

PprEstimate approx_row(const DirectedGraph& g, NodeId v, const RowParams& params, std::uint64_t seed,
                       QueryLedger& ledger, ExecPolicy exec) {
  check_params(g, v, params);
  const std::uint64_t walks = walk_count(g.num_nodes(), params);
  const std::uint32_t cap = walk_length_cap(params.epsilon, params.alpha);
  PprEstimate est = make_header(v, params, walks, cap);

  std::vector<NodeId> ends(walks, kNoEnd);
  std::uint64_t crawls = 0;
  std::uint64_t steps = 0;
  const auto count = static_cast<std::int64_t>(walks);
#ifdef _OPENMP
  const int threads = exec.threads > 0 ? exec.threads : omp_get_max_threads();
#pragma omp parallel for schedule(static) reduction(+ : crawls, steps) num_threads(threads)
#else
  (void)exec;
#endif
  for (std::int64_t w = 0; w < count; ++w) {
    QueryLedger local;
    RngStream rng(seed, static_cast<std::uint64_t>(w));
    const WalkOutcome out = simulate_walk(g, v, params.alpha, cap, rng, local);
    if (out.terminated) ends[w] = out.last_node;
    crawls += local.crawls;
    steps += local.walk_steps;
  }
  ledger.crawls += crawls;
  ledger.walk_steps += steps;

  tally(ends, est);
  return est;
}

PprEstimate approx_row_serial(const DirectedGraph& g, NodeId v, const RowParams& params, std::uint64_t seed,
                              QueryLedger& ledger) {
  check_params(g, v, params);
  const std::uint64_t walks = walk_count(g.num_nodes(), params);
  const std::uint32_t cap = walk_length_cap(params.epsilon, params.alpha);
  PprEstimate est = make_header(v, params, walks, cap);

  std::map<NodeId, std::uint64_t> node_counts;
  for (std::uint64_t w = 0; w < walks; ++w) {
    RngStream rng(seed, w);
    const WalkOutcome out = simulate_walk(g, v, params.alpha, cap, rng, ledger);
    if (out.terminated) ++node_counts[out.last_node];
  }
  for (const auto& [node, count] : node_counts) {
    est.entries.push_back({node, count, static_cast<double>(count) / static_cast<double>(walks)});
  }
  return est;
}

void write_estimate_tsv(const PprEstimate& est, const QueryLedger& ledger, std::ostream& out) {
  char buf[64];
  for (const auto& e : est.entries) {
    std::snprintf(buf, sizeof buf, "%u\t%.12g\n", e.node, e.value);
    out << buf;
  }
  out << "# walks=" << est.walks_run << " cap=" << est.walk_length_cap << " steps=" << ledger.walk_steps
      << " crawls=" << ledger.crawls << '\n';
}

void write_estimate_json(const PprEstimate& est, const QueryLedger& ledger, std::ostream& out) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : est.entries) entries.push_back({{"node", e.node}, {"estimate", e.value}, {"count", e.count}});
  nlohmann::json j{{"source", est.source},   {"alpha", est.alpha},
                   {"epsilon", est.epsilon}, {"rho", est.rho},
                   {"walks", est.walks_run}, {"cap", est.walk_length_cap},
                   {"entries", entries},     {"crawls", ledger.crawls},
                   {"walk_steps", ledger.walk_steps}};
  out << j.dump() << '\n';
}

}  // namespace sigpr
