#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "sigpr/graph.hpp"

namespace sigpr {

/// Counters for network access. Jumps and crawls are the two query types;
/// walk_steps counts every simulated walk step, including the termination
/// step that does not touch the network.
struct QueryLedger {
  std::uint64_t jumps = 0;
  std::uint64_t crawls = 0;
  std::uint64_t walk_steps = 0;

  QueryLedger& operator+=(const QueryLedger& other) {
    jumps += other.jumps;
    crawls += other.crawls;
    walk_steps += other.walk_steps;
    return *this;
  }
  void reset() { *this = QueryLedger{}; }
  bool operator==(const QueryLedger&) const = default;
};

constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Folds a sequence of integers into one stream id. Used to give every
/// (operation, scale, sample, walk) its own substream.
template <typename... Parts>
constexpr std::uint64_t stream_key(std::uint64_t first, Parts... rest) {
  std::uint64_t h = mix64(first + 0x9e3779b97f4a7c15ULL);
  ((h = mix64(h ^ (static_cast<std::uint64_t>(rest) + 0x9e3779b97f4a7c15ULL))), ...);
  return h;
}

/// Counter-based generator (SplitMix64 over a keyed starting counter). The
/// sequence is a pure function of (seed, stream_id), so results never depend
/// on which worker runs a stream.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id)
      : seed_(seed), stream_id_(stream_id), state_(mix64(seed ^ mix64(stream_id + 0x632be59bd9b4e019ULL))) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound) by Lemire's multiply-and-reject.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t x = next();
    __uint128_t m = static_cast<__uint128_t>(x) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t floor = (0 - bound) % bound;
      while (low < floor) {
        x = next();
        m = static_cast<__uint128_t>(x) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t state_;
};

/// Jump query: a uniformly random node.
inline NodeId jump(const DirectedGraph& g, RngStream& rng, QueryLedger& ledger) {
  ++ledger.jumps;
  return static_cast<NodeId>(rng.below(g.num_nodes()));
}

/// RandomCrawl query: a uniformly random out-neighbor of v, counting
/// multiplicity. A dangling v yields a uniform node.
inline NodeId random_crawl(const DirectedGraph& g, NodeId v, RngStream& rng, QueryLedger& ledger) {
  if (!g.contains(v)) {
    throw std::out_of_range("random_crawl: node " + std::to_string(v) + " out of range");
  }
  ++ledger.crawls;
  const auto nbrs = g.out_neighbors(v);
  if (nbrs.empty()) return static_cast<NodeId>(rng.below(g.num_nodes()));
  return nbrs[rng.below(nbrs.size())];
}

}  // namespace sigpr
