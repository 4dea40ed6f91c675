#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <vector>

#include "sigpr/graph.hpp"
#include "sigpr/query.hpp"

namespace sigpr {

struct WalkOutcome {
  bool terminated = false;
  NodeId last_node = 0;  // meaningful only when terminated
  std::uint32_t steps_taken = 0;
};

/// One restart walk from `source`, stopped after `cap` steps. Each step first
/// flips the alpha-coin; on heads the walk ends and the node it occupies is
/// reported, otherwise it moves by RandomCrawl.
WalkOutcome simulate_walk(const DirectedGraph& g, NodeId source, double alpha, std::uint32_t cap, RngStream& rng,
                          QueryLedger& ledger);

struct RowParams {
  double epsilon = 0.1;
  double rho = 0.5;
  double alpha = 0.15;
  double walks_const = 16.0;  // the 16 in r = 16 log2(n) / (eps rho^2)
};

/// Walk budget r = ceil(walks_const * log2(n) / (eps * rho^2)), at least 1.
std::uint64_t walk_count(std::size_t n, const RowParams& p);
/// Walk cap = ceil(log_{1/(1-alpha)}(4 / eps)), at least 1.
std::uint32_t walk_length_cap(double epsilon, double alpha);

struct PprEntry {
  NodeId node;
  std::uint64_t count;
  double value;  // count / walks_run

  bool operator==(const PprEntry&) const = default;
};

struct PprEstimate {
  NodeId source = 0;
  double alpha = 0.0;
  double epsilon = 0.0;
  double rho = 0.0;
  std::vector<PprEntry> entries;  // sorted by node, counts > 0
  std::uint64_t walks_run = 0;
  std::uint32_t walk_length_cap = 0;

  /// Estimated value at `u`, 0 for unlisted nodes.
  double value(NodeId u) const;
  bool contains(NodeId u) const;
  double total() const;

  bool operator==(const PprEstimate&) const = default;
};

struct ExecPolicy {
  int threads = 0;  // 0: OpenMP default
};

/// Monte-Carlo estimate of the PPR row of `v`. Walk w draws from
/// RngStream(seed, w), so the output is identical for any thread count.
PprEstimate approx_row(const DirectedGraph& g, NodeId v, const RowParams& params, std::uint64_t seed,
                       QueryLedger& ledger, ExecPolicy exec = {});

/// Straight-line reference: one walk after another into a std::map.
PprEstimate approx_row_serial(const DirectedGraph& g, NodeId v, const RowParams& params, std::uint64_t seed,
                              QueryLedger& ledger);

namespace detail {

// Single-threaded row kernel with caller-owned scratch; the building block
// for callers that parallelize across rows instead of walks.
PprEstimate approx_row_single(const DirectedGraph& g, NodeId v, const RowParams& params, std::uint64_t seed,
                              QueryLedger& ledger, std::vector<NodeId>& scratch);

}  // namespace detail

/// "node<TAB>estimate" lines followed by
/// "# walks=r cap=length steps=S crawls=C".
void write_estimate_tsv(const PprEstimate& est, const QueryLedger& ledger, std::ostream& out);
void write_estimate_json(const PprEstimate& est, const QueryLedger& ledger, std::ostream& out);

}  // namespace sigpr
