#include "sigpr/generators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "sigpr/query.hpp"

namespace sigpr {

PathStar gen_path_star(std::size_t n, double delta) {
  if (n < 8) throw std::invalid_argument("path-star needs n >= 8");
  if (!(delta > 0.0) || !(delta < static_cast<double>(n) / 2.0 - 1.0)) {
    throw std::invalid_argument("path-star needs 0 < delta < n/2 - 1");
  }
  PathStarSpec spec;
  spec.n = n;
  spec.delta = delta;
  spec.d = 2 * static_cast<std::size_t>(std::ceil(delta));
  if (2 * (spec.d + 1) >= n) throw std::invalid_argument("path-star needs d + 1 < n/2");
  spec.path_len = n - spec.d - 1;
  spec.hub_id = static_cast<NodeId>(spec.path_len);

  std::vector<Edge> edges;
  edges.reserve(2 * (spec.path_len - 1 + spec.d));
  for (NodeId u = 0; u + 1 < spec.path_len; ++u) {
    edges.push_back({u, u + 1});
    edges.push_back({u + 1, u});
  }
  for (NodeId leaf = spec.hub_id + 1; leaf < n; ++leaf) {
    edges.push_back({spec.hub_id, leaf});
    edges.push_back({leaf, spec.hub_id});
  }
  return {DirectedGraph(n, edges), spec};
}

GraphKind parse_graph_kind(std::string_view name) {
  if (name == "self-loops") return GraphKind::SelfLoops;
  if (name == "cycle") return GraphKind::DirectedCycle;
  if (name == "star") return GraphKind::DirectedStar;
  if (name == "random") return GraphKind::UniformRandom;
  throw std::invalid_argument("unknown graph kind '" + std::string(name) + "'");
}

DirectedGraph gen_named(GraphKind kind, std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("graph needs at least one node");
  std::vector<Edge> edges;
  switch (kind) {
    case GraphKind::SelfLoops:
      for (NodeId v = 0; v < n; ++v) edges.push_back({v, v});
      break;
    case GraphKind::DirectedCycle:
      for (NodeId v = 0; v < n; ++v) edges.push_back({v, static_cast<NodeId>((v + 1) % n)});
      break;
    case GraphKind::DirectedStar:
      if (n < 2) throw std::invalid_argument("directed star needs n >= 2");
      for (NodeId v = 1; v < n; ++v) edges.push_back({v, 0});
      edges.push_back({0, 1});
      break;
    case GraphKind::UniformRandom: {
      if (m == 0) throw std::invalid_argument("random graph needs m >= 1");
      RngStream rng(seed, 0);
      edges.reserve(m);
      for (std::size_t i = 0; i < m; ++i) {
        const auto u = static_cast<NodeId>(rng.below(n));
        const auto v = static_cast<NodeId>(rng.below(n));
        edges.push_back({u, v});
      }
      break;
    }
  }
  return DirectedGraph(n, edges);
}

}  // namespace sigpr
