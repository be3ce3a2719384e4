#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "squares/types.hpp"
#include "squares/vertex_set.hpp"

namespace squares {

// Non-embedded simple graph with sorted adjacency lists.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n) : adjacency_(static_cast<std::size_t>(n)) {}

  // Duplicate edges are merged; self-loops and out-of-range endpoints throw.
  static SimpleGraph from_edges(int n, std::span<const std::pair<VertexId, VertexId>> edges);
  // Lists must already be symmetric and loop-free; each is sorted and deduplicated.
  static SimpleGraph from_adjacency(std::vector<std::vector<VertexId>> adjacency);

  int num_vertices() const { return static_cast<int>(adjacency_.size()); }
  int num_edges() const { return edges_; }
  int degree(VertexId v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
  int max_degree() const;
  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  bool has_edge(VertexId u, VertexId v) const;

  // Closed neighbourhood N[v] as a bitset.
  VertexSet closed_neighborhood(VertexId v) const;
  std::vector<VertexSet> closed_neighborhoods() const;

  std::vector<std::pair<VertexId, VertexId>> edges() const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::vector<std::vector<VertexId>> adjacency_;
  int edges_ = 0;
};

// Edge-list text: "n m" header then one "u v" line per edge with u < v.
// '#' starts a comment.
SimpleGraph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const SimpleGraph& graph);

}  // namespace squares
