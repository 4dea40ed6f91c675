#include "sigpr/significant.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sigpr {

namespace {

constexpr std::uint64_t kJumpTag = 0x4a554d50;  // "JUMP"
constexpr std::uint64_t kRowTag = 0x524f5753;   // "ROWS"

void check_delta(std::size_t n, double delta) {
  if (!(delta >= 1.0 && delta <= static_cast<double>(n))) {
    throw std::invalid_argument("delta must lie in [1, n]");
  }
}

}  // namespace

double ScaleIndex::epsilon() const { return std::ldexp(1.0, -t); }

SignificantConfig SignificantConfig::scaled(double factor) const {
  if (!(factor > 0.0)) throw std::invalid_argument("const scale must be positive");
  SignificantConfig c = *this;
  c.sample_const *= factor;
  c.walks_const *= factor;
  c.heavy_count_threshold_fraction *= factor;
  return c;
}

void SignificantConfig::validate() const {
  if (!(sample_const > 0 && walks_const > 0 && heavy_count_threshold_fraction > 0 && output_threshold_fraction > 0)) {
    throw std::invalid_argument("significant config constants must be positive");
  }
  if (!(rho > 0 && rho < 1)) throw std::invalid_argument("rho must lie in (0, 1)");
}

double clamped_log2(std::size_t n) { return std::max(std::log2(static_cast<double>(n)), 1.0); }

int finest_scale(std::size_t n, double delta) {
  return std::max(0, static_cast<int>(std::ceil(std::log2(4.0 * static_cast<double>(n) / delta))));
}

std::uint64_t samples_at_scale(std::size_t n, double delta, ScaleIndex t, const SignificantConfig& cfg) {
  const double lg = clamped_log2(n);
  return static_cast<std::uint64_t>(
      std::ceil(cfg.sample_const * (static_cast<double>(n) / delta) * t.epsilon() * lg * lg));
}

RowParams row_params_at_scale(ScaleIndex t, double alpha, const SignificantConfig& cfg) {
  return RowParams{t.epsilon() / 2.0, cfg.rho, alpha, cfg.walks_const};
}

void ChunkAccumulator::add(NodeId node, ScaleIndex t, std::uint64_t count) { counts_[{node, t.t}] += count; }

std::uint64_t ChunkAccumulator::count(NodeId node, ScaleIndex t) const {
  const auto it = counts_.find({node, t.t});
  return it == counts_.end() ? 0 : it->second;
}

void ChunkAccumulator::merge(const ChunkAccumulator& other) {
  for (const auto& [key, c] : other.counts_) counts_[key] += c;
}

void chunk_assign(const PprEstimate& estimates, ScaleIndex t, ChunkAccumulator& acc) {
  const double lo = t.epsilon();
  const double hi = 2.0 * lo;
  for (const auto& e : estimates.entries) {
    if (e.value >= lo && e.value < hi) acc.add(e.node, t);
  }
}

std::map<NodeId, double> reconstruct_scores(const ChunkAccumulator& acc, double delta, std::size_t n,
                                            const SignificantConfig& cfg) {
  const double lg = clamped_log2(n);
  const double heavy = cfg.heavy_count_threshold_fraction * lg;
  std::map<NodeId, double> scores;
  for (const auto& [key, count] : acc.counts()) {
    if (static_cast<double>(count) < heavy) continue;
    const double eps = ScaleIndex{key.scale}.epsilon();
    const double add = cfg.reconstruction_mode == ReconstructionMode::SumScale
                           ? static_cast<double>(count) * delta / (cfg.sample_const * lg * lg)
                           : delta / (2.0 * eps * lg * lg);
    scores[key.node] += add;
  }
  return scores;
}

bool SignificantResult::contains(NodeId u) const {
  return std::any_of(members.begin(), members.end(), [u](const auto& m) { return m.node == u; });
}

double SignificantResult::estimate(NodeId u) const {
  for (const auto& m : members) {
    if (m.node == u) return m.estimate;
  }
  return 0.0;
}

QueryBudget significant_budget(std::size_t n, double delta, double alpha, const SignificantConfig& cfg) {
  QueryBudget b;
  const int T = finest_scale(n, delta);
  for (int t = 0; t <= T; ++t) {
    const ScaleIndex scale{t};
    const std::uint64_t s = samples_at_scale(n, delta, scale, cfg);
    const RowParams p = row_params_at_scale(scale, alpha, cfg);
    b.jumps += s;
    b.max_walk_steps += s * walk_count(n, p) * walk_length_cap(p.epsilon, p.alpha);
  }
  return b;
}

namespace {

SignificantResult finish(const DirectedGraph& g, double delta, double alpha, const SignificantConfig& cfg,
                         const ChunkAccumulator& acc, const QueryLedger& used) {
  SignificantResult r;
  r.delta = delta;
  r.alpha = alpha;
  r.finest_scale = finest_scale(g.num_nodes(), delta);
  r.ledger_snapshot = used;
  r.config = cfg;
  r.scores = reconstruct_scores(acc, delta, g.num_nodes(), cfg);
  const double cut = cfg.output_threshold_fraction * delta;
  for (const auto& [node, score] : r.scores) {
    if (score >= cut) r.members.push_back({node, score});
  }
  std::sort(r.members.begin(), r.members.end(), [](const auto& a, const auto& b) {
    return a.estimate != b.estimate ? a.estimate > b.estimate : a.node < b.node;
  });
  return r;
}

void check_inputs(const DirectedGraph& g, double delta, double alpha, const SignificantConfig& cfg) {
  check_delta(g.num_nodes(), delta);
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in (0, 1]");
  cfg.validate();
}

}  // namespace

SignificantResult significant_pageranks(const DirectedGraph& g, double delta, double alpha, std::uint64_t seed,
                                        const SignificantConfig& cfg, QueryLedger& ledger, ExecPolicy exec) {
  check_inputs(g, delta, alpha, cfg);
  const int T = finest_scale(g.num_nodes(), delta);
#ifdef _OPENMP
  const int threads = exec.threads > 0 ? exec.threads : omp_get_max_threads();
#else
  (void)exec;
  const int threads = 1;
#endif

  ChunkAccumulator acc;
  QueryLedger used;
  for (int t = 0; t <= T; ++t) {
    const ScaleIndex scale{t};
    const RowParams params = row_params_at_scale(scale, alpha, cfg);
    const auto samples = static_cast<std::int64_t>(samples_at_scale(g.num_nodes(), delta, scale, cfg));

    std::vector<ChunkAccumulator> partial(static_cast<std::size_t>(threads));
    std::vector<QueryLedger> spent(static_cast<std::size_t>(threads));
#pragma omp parallel num_threads(threads)
    {
#ifdef _OPENMP
      const auto worker = static_cast<std::size_t>(omp_get_thread_num());
#else
      const std::size_t worker = 0;
#endif
      std::vector<NodeId> scratch;
#pragma omp for schedule(dynamic, 4)
      for (std::int64_t i = 0; i < samples; ++i) {
        RngStream jump_rng(seed, stream_key(kJumpTag, t, i));
        const NodeId v = jump(g, jump_rng, spent[worker]);
        const PprEstimate row =
            detail::approx_row_single(g, v, params, stream_key(seed, kRowTag, t, i), spent[worker], scratch);
        chunk_assign(row, scale, partial[worker]);
      }
    }
    for (std::size_t w = 0; w < partial.size(); ++w) {
      acc.merge(partial[w]);
      used += spent[w];
    }
  }
  ledger += used;
  return finish(g, delta, alpha, cfg, acc, used);
}

SignificantResult significant_pageranks_serial(const DirectedGraph& g, double delta, double alpha,
                                               std::uint64_t seed, const SignificantConfig& cfg,
                                               QueryLedger& ledger) {
  check_inputs(g, delta, alpha, cfg);
  const int T = finest_scale(g.num_nodes(), delta);
  ChunkAccumulator acc;
  QueryLedger used;
  for (int t = 0; t <= T; ++t) {
    const ScaleIndex scale{t};
    const RowParams params = row_params_at_scale(scale, alpha, cfg);
    const std::uint64_t samples = samples_at_scale(g.num_nodes(), delta, scale, cfg);
    for (std::uint64_t i = 0; i < samples; ++i) {
      RngStream jump_rng(seed, stream_key(kJumpTag, t, i));
      const NodeId v = jump(g, jump_rng, used);
      const PprEstimate row = approx_row_serial(g, v, params, stream_key(seed, kRowTag, t, i), used);
      chunk_assign(row, scale, acc);
    }
  }
  ledger += used;
  return finish(g, delta, alpha, cfg, acc, used);
}

void write_significant_json(const SignificantResult& r, std::ostream& out) {
  nlohmann::json members = nlohmann::json::array();
  for (const auto& m : r.members) members.push_back({{"node", m.node}, {"estimate", m.estimate}});
  const auto& c = r.config;
  nlohmann::json j{
      {"delta", r.delta},
      {"c", static_cast<int>(r.c_claimed)},
      {"alpha", r.alpha},
      {"members", members},
      {"jumps", r.ledger_snapshot.jumps},
      {"crawls", r.ledger_snapshot.crawls},
      {"walk_steps", r.ledger_snapshot.walk_steps},
      {"config",
       {{"sample_const", c.sample_const},
        {"walks_const", c.walks_const},
        {"heavy_count_threshold_fraction", c.heavy_count_threshold_fraction},
        {"output_threshold_fraction", c.output_threshold_fraction},
        {"reconstruction_mode", c.reconstruction_mode == ReconstructionMode::SumScale ? "sum_scale" : "paper_literal"},
        {"rho", c.rho},
        {"finest_scale", r.finest_scale}}}};
  out << j.dump() << '\n';
}

}  // namespace sigpr
