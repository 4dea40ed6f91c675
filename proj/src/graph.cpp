#include "sigpr/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <limits>
#include <optional>
#include <sstream>

namespace sigpr {

DirectedGraph::DirectedGraph(std::size_t num_nodes, std::span<const Edge> edges) {
  if (num_nodes == 0) throw std::invalid_argument("graph must have at least one node");
  if (num_nodes > std::numeric_limits<NodeId>::max()) {
    throw std::invalid_argument("node count exceeds NodeId range");
  }
  offsets_.assign(num_nodes + 1, 0);
  for (const Edge& e : edges) {
    if (e.from >= num_nodes || e.to >= num_nodes) {
      throw std::out_of_range("edge " + std::to_string(e.from) + "->" + std::to_string(e.to) +
                              " outside [0, " + std::to_string(num_nodes) + ")");
    }
    ++offsets_[e.from + 1];
  }
  for (std::size_t v = 0; v < num_nodes; ++v) offsets_[v + 1] += offsets_[v];

  // Stable counting sort keeps each source's edges in input order.
  targets_.resize(edges.size());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges) targets_[cursor[e.from]++] = e.to;
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::optional<std::uint64_t> parse_uint(std::string_view token) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

// "nodes=N" after the '#', with optional spaces around the '#' body.
std::optional<std::uint64_t> parse_nodes_header(std::string_view comment, std::size_t line) {
  comment = trim(comment);
  constexpr std::string_view key = "nodes=";
  if (!comment.starts_with(key)) return std::nullopt;
  const auto value = parse_uint(trim(comment.substr(key.size())));
  if (!value || *value == 0) throw GraphFormatError(line, "bad node-count header");
  return value;
}

}  // namespace

DirectedGraph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::optional<std::uint64_t> header_nodes;
  std::uint64_t max_id = 0;
  std::size_t line_no = 0;

  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;

    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (auto n = parse_nodes_header(line.substr(1), line_no)) {
        if (header_nodes) throw GraphFormatError(line_no, "duplicate node-count header");
        if (!edges.empty()) throw GraphFormatError(line_no, "node-count header after edges");
        header_nodes = n;
      }
      continue;
    }

    std::string_view fields[3];
    std::size_t count = 0;
    while (!line.empty() && count < 3) {
      std::size_t end = 0;
      while (end < line.size() && !is_space(line[end])) ++end;
      fields[count++] = line.substr(0, end);
      line = trim(line.substr(end));
    }
    if (count != 2) throw GraphFormatError(line_no, "expected two node ids");
    const auto u = parse_uint(fields[0]);
    const auto v = parse_uint(fields[1]);
    if (!u || !v) throw GraphFormatError(line_no, "node ids must be non-negative integers");
    if (*u >= std::numeric_limits<NodeId>::max() || *v >= std::numeric_limits<NodeId>::max()) {
      throw GraphFormatError(line_no, "node id too large");
    }
    if (header_nodes && (*u >= *header_nodes || *v >= *header_nodes)) {
      throw GraphFormatError(line_no, "node id not below declared nodes=" + std::to_string(*header_nodes));
    }
    max_id = std::max({max_id, *u, *v});
    edges.push_back({static_cast<NodeId>(*u), static_cast<NodeId>(*v)});
  }

  if (!header_nodes && edges.empty()) throw GraphFormatError(0, "empty edge list");
  const std::uint64_t n = header_nodes ? *header_nodes : max_id + 1;
  return DirectedGraph(n, edges);
}

DirectedGraph load_edge_list(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_edge_list(text);
}

DirectedGraph load_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_edge_list(in);
}

void write_edge_list(const DirectedGraph& g, std::ostream& out, std::span<const std::string> comments) {
  out << "# nodes=" << g.num_nodes() << '\n';
  for (const auto& c : comments) out << "# " << c << '\n';
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    for (NodeId v : g.out_neighbors(u)) out << u << '\t' << v << '\n';
  }
}

}  // namespace sigpr
