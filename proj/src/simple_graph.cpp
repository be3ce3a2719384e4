#include "squares/simple_graph.hpp"

#include <algorithm>

#include "squares/error.hpp"
#include "text_util.hpp"

namespace squares {

SimpleGraph SimpleGraph::from_edges(int n, std::span<const std::pair<VertexId, VertexId>> edges) {
  if (n < 0) fail(ErrorKind::InvalidArgument, "negative vertex count");
  std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      fail(ErrorKind::InvalidArgument, "edge endpoint out of range");
    if (u == v) fail(ErrorKind::SelfLoopOrMultiEdge, "self-loop at " + std::to_string(u));
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  return from_adjacency(std::move(adj));
}

SimpleGraph SimpleGraph::from_adjacency(std::vector<std::vector<VertexId>> adjacency) {
  SimpleGraph g;
  long long total = 0;
  for (auto& list : adjacency) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    total += static_cast<long long>(list.size());
  }
  g.adjacency_ = std::move(adjacency);
  g.edges_ = static_cast<int>(total / 2);
  return g;
}

int SimpleGraph::max_degree() const {
  int best = 0;
  for (const auto& list : adjacency_) best = std::max(best, static_cast<int>(list.size()));
  return best;
}

bool SimpleGraph::has_edge(VertexId u, VertexId v) const {
  const auto& list = adjacency_[static_cast<std::size_t>(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

VertexSet SimpleGraph::closed_neighborhood(VertexId v) const {
  VertexSet s(num_vertices());
  s.set(v);
  for (VertexId u : neighbors(v)) s.set(u);
  return s;
}

std::vector<VertexSet> SimpleGraph::closed_neighborhoods() const {
  std::vector<VertexSet> out;
  out.reserve(adjacency_.size());
  for (VertexId v = 0; v < num_vertices(); ++v) out.push_back(closed_neighborhood(v));
  return out;
}

std::vector<std::pair<VertexId, VertexId>> SimpleGraph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(static_cast<std::size_t>(edges_));
  for (VertexId u = 0; u < num_vertices(); ++u)
    for (VertexId v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

SimpleGraph parse_edge_list(std::string_view text) {
  auto lines = detail::meaningful_lines(text);
  if (lines.empty()) fail(ErrorKind::SyntaxError, "missing \"n m\" header", 1);
  auto header = detail::split_ws(lines[0].body);
  if (header.size() != 2) fail(ErrorKind::SyntaxError, "header must be \"n m\"", lines[0].number);
  auto n = detail::parse_int(header[0]);
  auto m = detail::parse_int(header[1]);
  if (!n || !m || *n < 0 || *m < 0) fail(ErrorKind::SyntaxError, "bad header counts", lines[0].number);

  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto tokens = detail::split_ws(lines[i].body);
    if (tokens.size() != 2) fail(ErrorKind::SyntaxError, "expected \"u v\"", lines[i].number);
    auto u = detail::parse_int(tokens[0]);
    auto v = detail::parse_int(tokens[1]);
    if (!u || !v || *u < 0 || *v < 0 || *u >= *n || *v >= *n)
      fail(ErrorKind::SyntaxError, "edge endpoint out of range", lines[i].number);
    if (*u == *v) fail(ErrorKind::SyntaxError, "self-loop", lines[i].number);
    edges.emplace_back(static_cast<VertexId>(*u), static_cast<VertexId>(*v));
  }
  auto g = SimpleGraph::from_edges(static_cast<int>(*n), edges);
  if (g.num_edges() != *m || static_cast<long long>(edges.size()) != *m)
    fail(ErrorKind::SyntaxError, "edge count does not match header", lines[0].number);
  return g;
}

std::string serialize_edge_list(const SimpleGraph& graph) {
  std::string out = std::to_string(graph.num_vertices()) + " " + std::to_string(graph.num_edges()) + "\n";
  for (auto [u, v] : graph.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace squares
