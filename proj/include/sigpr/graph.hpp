#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sigpr {

using NodeId = std::uint32_t;

struct Edge {
  NodeId from;
  NodeId to;
};

// Nodes without out-links behave as if they linked to every node. The graph
// stores nothing for them; samplers resolve the policy at query time.
enum class DanglingPolicy { UniformAll };

/// Immutable out-adjacency graph in CSR layout. Parallel edges and self-loops
/// are kept with multiplicity, and each node's out-list preserves insertion
/// order.
class DirectedGraph {
 public:
  DirectedGraph() = default;
  DirectedGraph(std::size_t num_nodes, std::span<const Edge> edges);

  std::size_t num_nodes() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const { return targets_.size(); }
  DanglingPolicy dangling_policy() const { return DanglingPolicy::UniformAll; }

  std::size_t out_degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool is_dangling(NodeId v) const { return out_degree(v) == 0; }
  bool contains(NodeId v) const { return v < num_nodes(); }

  std::span<const NodeId> out_neighbors(NodeId v) const {
    return {targets_.data() + offsets_[v], out_degree(v)};
  }

  bool operator==(const DirectedGraph&) const = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> targets_;
};

class GraphFormatError : public std::runtime_error {
 public:
  GraphFormatError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  /// 1-based line of the offending input, 0 when the error is not tied to a line.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Parses the tab/space separated edge-list format. Lines starting with '#'
/// are comments, except "# nodes=N" which fixes the node count.
DirectedGraph parse_edge_list(std::string_view text);
DirectedGraph load_edge_list(std::istream& in);
DirectedGraph load_edge_list_file(const std::string& path);

/// Writes the header and one "u<TAB>v" line per edge. Each string in
/// `comments` is emitted as an extra "# ..." line after the header.
void write_edge_list(const DirectedGraph& g, std::ostream& out,
                     std::span<const std::string> comments = {});

}  // namespace sigpr
