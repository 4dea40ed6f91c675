#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <vector>

#include "sigpr/graph.hpp"
#include "sigpr/local_ppr.hpp"
#include "sigpr/query.hpp"

namespace sigpr {

/// Precision level t with epsilon_t = 2^-t.
struct ScaleIndex {
  int t = 0;
  double epsilon() const;
  auto operator<=>(const ScaleIndex&) const = default;
};

enum class ReconstructionMode {
  SumScale,      // counts * delta / (sample_const * log2^2 n), estimates the chunk sum
  PaperLiteral,  // delta / (2 * eps_t * log2^2 n) once per heavy chunk
};

struct SignificantConfig {
  double sample_const = 4.0;
  double walks_const = 16.0;
  double heavy_count_threshold_fraction = 0.5;
  double output_threshold_fraction = 0.25;
  ReconstructionMode reconstruction_mode = ReconstructionMode::SumScale;
  double rho = 0.5;

  /// Uniformly scales the sampling constants and the heavy-count threshold
  /// by `factor`. Only for quick test runs; guarantees assume factor 1.
  SignificantConfig scaled(double factor) const;
  void validate() const;
};

/// max(log2 n, 1)
double clamped_log2(std::size_t n);
/// T = ceil(log2(4n / delta)).
int finest_scale(std::size_t n, double delta);
/// s_t = ceil(sample_const * (n / delta) * eps_t * log2^2 n).
std::uint64_t samples_at_scale(std::size_t n, double delta, ScaleIndex t, const SignificantConfig& cfg);
/// Row parameters used for the rows sampled at scale t: (eps_t / 2, rho).
RowParams row_params_at_scale(ScaleIndex t, double alpha, const SignificantConfig& cfg);

struct ChunkKey {
  NodeId node;
  int scale;
  auto operator<=>(const ChunkKey&) const = default;
};

/// Sample counts per (node, scale), ordered node-major so that a node's
/// chunks are contiguous.
class ChunkAccumulator {
 public:
  void add(NodeId node, ScaleIndex t, std::uint64_t count = 1);
  std::uint64_t count(NodeId node, ScaleIndex t) const;
  void merge(const ChunkAccumulator& other);

  const std::map<ChunkKey, std::uint64_t>& counts() const { return counts_; }
  bool empty() const { return counts_.empty(); }
  std::size_t size() const { return counts_.size(); }
  bool operator==(const ChunkAccumulator&) const = default;

 private:
  std::map<ChunkKey, std::uint64_t> counts_;
};

/// Adds one count to (u, t) for every estimate value in [eps_t, 2 eps_t).
void chunk_assign(const PprEstimate& estimates, ScaleIndex t, ChunkAccumulator& acc);

/// Sums the weighted heavy chunks (count >= heavy fraction * log2 n) of each node.
std::map<NodeId, double> reconstruct_scores(const ChunkAccumulator& acc, double delta, std::size_t n,
                                            const SignificantConfig& cfg);

struct SignificantMember {
  NodeId node;
  double estimate;
  bool operator==(const SignificantMember&) const = default;
};

struct SignificantResult {
  std::vector<SignificantMember> members;  // descending estimate, ties by node id
  std::map<NodeId, double> scores;         // every node with a heavy chunk
  double delta = 0.0;
  double alpha = 0.0;
  double c_claimed = 6.0;
  int finest_scale = 0;
  QueryLedger ledger_snapshot;
  SignificantConfig config;

  bool contains(NodeId u) const;
  double estimate(NodeId u) const;  // 0 when not a member
};

/// Closed-form query totals for one run: jumps = sum_t s_t, and the largest
/// possible walk-step count sum_t s_t * r_t * cap_t.
struct QueryBudget {
  std::uint64_t jumps = 0;
  std::uint64_t max_walk_steps = 0;
};
QueryBudget significant_budget(std::size_t n, double delta, double alpha, const SignificantConfig& cfg);

/// Multi-scale sampler for the Significant PageRanks problem. Samples of one
/// scale run on parallel workers with private accumulators; every jump and
/// row seed derives from (seed, t, sample index).
SignificantResult significant_pageranks(const DirectedGraph& g, double delta, double alpha, std::uint64_t seed,
                                        const SignificantConfig& cfg, QueryLedger& ledger, ExecPolicy exec = {});

/// Single-threaded reference built on approx_row_serial.
SignificantResult significant_pageranks_serial(const DirectedGraph& g, double delta, double alpha,
                                               std::uint64_t seed, const SignificantConfig& cfg,
                                               QueryLedger& ledger);

void write_significant_json(const SignificantResult& r, std::ostream& out);

}  // namespace sigpr
