#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "sigpr/graph.hpp"

namespace sigpr {

struct PathStarSpec {
  std::size_t n = 0;
  double delta = 0.0;
  std::size_t d = 0;         // star leaves, 2 * ceil(delta)
  NodeId hub_id = 0;
  std::size_t path_len = 0;  // n - d - 1
};

struct PathStar {
  DirectedGraph graph;
  PathStarSpec spec;
};

/// Undirected path on nodes [0, path_len) plus a disjoint undirected star
/// whose hub is node path_len and whose leaves are the remaining d nodes.
/// Every undirected edge becomes two arcs.
PathStar gen_path_star(std::size_t n, double delta);

enum class GraphKind { SelfLoops, DirectedCycle, DirectedStar, UniformRandom };

GraphKind parse_graph_kind(std::string_view name);

/// SelfLoops: v->v. DirectedCycle: v->v+1 mod n. DirectedStar: every v>0
/// points at 0 and 0->1. UniformRandom: m arcs with uniform endpoints.
DirectedGraph gen_named(GraphKind kind, std::size_t n, std::size_t m = 0, std::uint64_t seed = 0);

}  // namespace sigpr
