#include <cmath>
#include <set>
#include <sstream>

#include "doctest.h"
#include "sigpr/generators.hpp"
#include "sigpr/oracle.hpp"
#include "sigpr/significant.hpp"

using namespace sigpr;

namespace {

PprEstimate estimate_with(std::vector<PprEntry> entries) {
  PprEstimate e;
  e.walks_run = 1;
  e.entries = std::move(entries);
  return e;
}

}  // namespace

TEST_CASE("chunk_assign uses half-open scale intervals") {
  const NodeId u = 3;
  ChunkAccumulator acc;
  chunk_assign(estimate_with({{u, 1, 0.6}}), ScaleIndex{1}, acc);
  CHECK(acc.count(u, ScaleIndex{1}) == 1);
  chunk_assign(estimate_with({{u, 1, 0.6}}), ScaleIndex{0}, acc);
  CHECK(acc.count(u, ScaleIndex{0}) == 0);

  chunk_assign(estimate_with({{u, 1, 0.125}}), ScaleIndex{3}, acc);
  CHECK(acc.count(u, ScaleIndex{3}) == 1);
  chunk_assign(estimate_with({{u, 1, 0.125}}), ScaleIndex{2}, acc);
  CHECK(acc.count(u, ScaleIndex{2}) == 0);
  CHECK(acc.size() == 2);
}

TEST_CASE("scale intervals partition the value range") {
  const std::size_t n = 2000;
  const double delta = 50.0;
  const int T = finest_scale(n, delta);
  CHECK(T == 8);
  CHECK(ScaleIndex{T}.epsilon() <= delta / (4.0 * n));
  CHECK(ScaleIndex{T}.epsilon() >= delta / (4.0 * n) / 2.0);
  RngStream rng(1, 1);
  for (int i = 0; i < 20000; ++i) {
    // log-uniform over (delta/4n, 2)
    const double lo = std::log(delta / (4.0 * n));
    const double v = std::exp(lo + rng.uniform() * (std::log(2.0) - lo));
    if (!(v > delta / (4.0 * n))) continue;
    int hits = 0;
    for (int t = 0; t <= T; ++t) {
      const double e = ScaleIndex{t}.epsilon();
      hits += v >= e && v < 2 * e;
    }
    CHECK(hits == 1);
  }
}

TEST_CASE("reconstruct_scores") {
  SignificantConfig cfg;
  SUBCASE("empty") { CHECK(reconstruct_scores(ChunkAccumulator{}, 64, 1024, cfg).empty()); }
  SUBCASE("sum-scale weight") {
    ChunkAccumulator acc;
    acc.add(5, ScaleIndex{2}, 10);  // exactly log2(1024)
    const auto s = reconstruct_scores(acc, 64, 1024, cfg);
    REQUIRE(s.size() == 1);
    CHECK(s.at(5) == doctest::Approx(1.6).epsilon(1e-12));
  }
  SUBCASE("paper-literal weight") {
    cfg.reconstruction_mode = ReconstructionMode::PaperLiteral;
    ChunkAccumulator acc;
    acc.add(5, ScaleIndex{2}, 10);
    acc.add(5, ScaleIndex{3}, 7);
    const auto s = reconstruct_scores(acc, 64, 1024, cfg);
    // 64 / (2 * eps * 100) for eps = 1/4 and 1/8
    CHECK(s.at(5) == doctest::Approx(1.28 + 2.56).epsilon(1e-12));
  }
  SUBCASE("light chunks are dropped") {
    ChunkAccumulator acc;
    acc.add(1, ScaleIndex{0}, 4);  // below 0.5 * 10
    acc.add(2, ScaleIndex{0}, 5);
    const auto s = reconstruct_scores(acc, 64, 1024, cfg);
    CHECK(s.count(1) == 0);
    CHECK(s.count(2) == 1);
  }
}

TEST_CASE("accumulator merge is keywise addition") {
  ChunkAccumulator a, b, c;
  a.add(1, ScaleIndex{0}, 2);
  a.add(2, ScaleIndex{1}, 1);
  b.add(1, ScaleIndex{0}, 3);
  b.add(4, ScaleIndex{5}, 1);
  ChunkAccumulator ab = a, ba = b;
  ab.merge(b);
  ba.merge(a);
  CHECK(ab == ba);
  CHECK(ab.count(1, ScaleIndex{0}) == 5);
  CHECK(ab.size() == 3);
  c.merge(ab);
  CHECK(c == ab);
}

TEST_CASE("sample counts and config scaling") {
  SignificantConfig cfg;
  // ceil(4 * (1024/512) * 1 * 100)
  CHECK(samples_at_scale(1024, 512, ScaleIndex{0}, cfg) == 800);
  CHECK(samples_at_scale(1024, 512, ScaleIndex{3}, cfg) == 100);
  CHECK(finest_scale(1024, 512) == 3);
  CHECK(clamped_log2(1) == 1.0);
  CHECK(clamped_log2(2) == 1.0);
  const auto half = cfg.scaled(0.5);
  CHECK(half.sample_const == 2.0);
  CHECK(half.walks_const == 8.0);
  CHECK(half.heavy_count_threshold_fraction == 0.25);
  CHECK(half.output_threshold_fraction == cfg.output_threshold_fraction);
  CHECK_THROWS(cfg.scaled(0.0));
  const RowParams p = row_params_at_scale(ScaleIndex{2}, 0.15, cfg);
  CHECK(p.epsilon == 0.125);
  CHECK(p.rho == 0.5);
}

TEST_CASE("significant_pageranks validates delta") {
  const DirectedGraph g = gen_named(GraphKind::SelfLoops, 16);
  QueryLedger ledger;
  CHECK_THROWS_AS(significant_pageranks(g, 0.5, 0.15, 0, {}, ledger), std::invalid_argument);
  CHECK_THROWS_AS(significant_pageranks(g, 17, 0.15, 0, {}, ledger), std::invalid_argument);
}

TEST_CASE("ledger totals match the closed-form budget") {
  const PathStar ps = gen_path_star(400, 10);
  const SignificantConfig cfg = SignificantConfig{}.scaled(0.25);
  QueryLedger ledger;
  const auto r = significant_pageranks(ps.graph, 10, 0.15, 3, cfg, ledger);
  const QueryBudget budget = significant_budget(400, 10, 0.15, cfg);
  CHECK(ledger.jumps == budget.jumps);
  CHECK(ledger.walk_steps <= budget.max_walk_steps);
  CHECK(ledger.crawls <= ledger.walk_steps);
  CHECK(r.ledger_snapshot == ledger);
}

TEST_CASE("parallel sampler matches the serial reference for any thread count") {
  const PathStar ps = gen_path_star(300, 8);
  const SignificantConfig cfg = SignificantConfig{}.scaled(0.2);
  QueryLedger serial_ledger;
  const auto ref = significant_pageranks_serial(ps.graph, 8, 0.15, 11, cfg, serial_ledger);
  for (int threads : {1, 2, 4}) {
    QueryLedger ledger;
    const auto r = significant_pageranks(ps.graph, 8, 0.15, 11, cfg, ledger, ExecPolicy{threads});
    CHECK(r.members == ref.members);
    CHECK(r.scores == ref.scores);
    CHECK(ledger == serial_ledger);
  }
}

TEST_CASE("members are sorted and above the output threshold") {
  const PathStar ps = gen_path_star(400, 10);
  SignificantConfig cfg = SignificantConfig{}.scaled(0.25);
  QueryLedger ledger;
  const auto r = significant_pageranks(ps.graph, 10, 0.15, 5, cfg, ledger);
  REQUIRE_FALSE(r.members.empty());
  CHECK(r.members.front().node == ps.spec.hub_id);
  for (std::size_t i = 0; i < r.members.size(); ++i) {
    CHECK(r.members[i].estimate >= cfg.output_threshold_fraction * 10);
    if (i > 0) CHECK(r.members[i - 1].estimate >= r.members[i].estimate);
  }
  std::ostringstream os;
  write_significant_json(r, os);
  CHECK(os.str().find("\"c\":6") != std::string::npos);
}

TEST_CASE("directed star: exactly the nodes above delta are reported") {
  // leaves -> 0 and 0 -> 1, so node 1 inherits most of the hub's PageRank
  // and is above delta = PR(hub)/2 as well.
  const DirectedGraph g = gen_named(GraphKind::DirectedStar, 1000);
  const auto pr = exact_pagerank(g, 0.15);
  const double delta = pr[0] / 2.0;
  std::set<NodeId> above;
  for (NodeId v = 0; v < 1000; ++v) {
    if (pr[v] >= delta) above.insert(v);
    if (v > 1) CHECK(pr[v] < delta / 6.0);
  }
  CHECK(above == std::set<NodeId>{0, 1});
  for (std::uint64_t seed : {1, 2, 3}) {
    QueryLedger ledger;
    const auto r = significant_pageranks(g, delta, 0.15, seed, {}, ledger);
    std::set<NodeId> got;
    for (const auto& m : r.members) got.insert(m.node);
    CHECK(got == above);
  }
}
