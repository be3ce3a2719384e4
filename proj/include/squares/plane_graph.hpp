#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "squares/simple_graph.hpp"
#include "squares/types.hpp"

namespace squares {

using Rotation = std::vector<VertexId>;

/// A simple plane graph stored as a rotation system: for every vertex the
/// clockwise cyclic order of its neighbours.
///
/// Faces are traced with the rule "leave v along the neighbour that follows
/// the arrival vertex in rotation(v)". A PlaneGraph can only be obtained
/// through validated construction, so every instance is symmetric, simple and
/// has Euler characteristic 2 on each connected component.
class PlaneGraph {
 public:
  // The graph with no vertices.
  PlaneGraph() = default;

  // Throws AsymmetricAdjacency, SelfLoopOrMultiEdge or NonPlanarEmbedding.
  static PlaneGraph from_rotation(std::vector<Rotation> rotations);

  int num_vertices() const { return static_cast<int>(rotations_.size()); }
  int num_edges() const { return edges_; }
  int degree(VertexId v) const { return static_cast<int>(rotations_[idx(v)].size()); }
  int max_degree() const;

  std::span<const VertexId> rotation(VertexId v) const { return rotations_[idx(v)]; }
  const std::vector<Rotation>& rotations() const { return rotations_; }

  bool has_edge(VertexId u, VertexId v) const;
  // Index of u in rotation(v); -1 when uv is not an edge.
  int position(VertexId v, VertexId u) const;
  // The neighbour following u clockwise around v. uv must be an edge.
  VertexId successor(VertexId v, VertexId u) const;

  SimpleGraph to_simple() const;

  // Exact rotation-sequence equality (same starting points).
  friend bool operator==(const PlaneGraph& a, const PlaneGraph& b) { return a.rotations_ == b.rotations_; }

 private:
  static std::size_t idx(VertexId v) { return static_cast<std::size_t>(v); }

  std::vector<Rotation> rotations_;
  // sorted_[v] holds (neighbour, position in rotation(v)) ordered by neighbour.
  std::vector<std::vector<std::pair<VertexId, int>>> sorted_;
  int edges_ = 0;
};

PlaneGraph build_from_rotation(int n, std::vector<Rotation> rotations);

struct Dart {
  VertexId from;
  VertexId to;
  friend bool operator==(const Dart&, const Dart&) = default;
};

struct FaceWalk {
  std::vector<Dart> boundary;
  int length() const { return static_cast<int>(boundary.size()); }
  // Vertex sequence u_0, u_1, ... where boundary[i] = (u_i -> u_{i+1}).
  std::vector<VertexId> vertices() const;
};

// Every dart lies on exactly one walk. Isolated vertices contribute no walk.
std::vector<FaceWalk> faces(const PlaneGraph& graph);

// Per-component n_c - m_c + f_c, an isolated vertex counting as one face.
std::vector<int> euler_characteristics(const PlaneGraph& graph);

struct Relabeled {
  PlaneGraph graph;
  // mapping[old] = new id. Removed vertices map to kNoVertex, except that a
  // contracted endpoint maps to the merged vertex.
  std::vector<VertexId> mapping;
  VertexId merged = kNoVertex;
};

/// Contracts vw into a single vertex that takes w's place. Parallel edges
/// are collapsed by dropping the copy that came from v. Vertex v's id is given
/// to the former last vertex (n-1), so the graph stays densely indexed.
/// Throws NotAnEdge.
Relabeled contract_edge(const PlaneGraph& graph, VertexId v, VertexId w);

// Deletes v, relabelling like contract_edge.
Relabeled remove_vertex(const PlaneGraph& graph, VertexId v);

struct CycleSpec {
  std::vector<VertexId> vertices;
};

// Throws InvalidCycle if C is not a cycle of the graph.
void validate_cycle(const PlaneGraph& graph, const CycleSpec& cycle);

// True iff a and b are in different components of G - V(C).
// Throws VertexOnCycle, InvalidCycle.
bool cycle_separates(const PlaneGraph& graph, const CycleSpec& cycle, VertexId a, VertexId b);

// For a, b separated by both cycles: a common neighbour of a and b lying on
// both cycles, or nothing when a and b are at distance at least 3.
// Throws PreconditionViolated when some cycle does not separate a from b.
std::optional<VertexId> remark1_common_neighbor(const PlaneGraph& graph, const CycleSpec& c1,
                                                const CycleSpec& c2, VertexId a, VertexId b);

/// Adds chords at vertices of degree <= 10 lying on faces of length >= 4
/// until no such chord can be embedded. Faces are visited in ascending
/// (lowest vertex id, length) order; at a face corner the chord goes to the
/// vertex two steps ahead when possible, otherwise to the next admissible
/// vertex further along the walk. Chords whose edge already exists are skipped.
PlaneGraph diagonalize(const PlaneGraph& graph);

inline constexpr int kDiagonalizeDegreeLimit = 10;

// Lexicographically least BFS code over all starting darts. Two connected
// plane graphs have equal codes iff an orientation-preserving relabelling maps
// one rotation system onto the other. Throws InvalidArgument when disconnected.
std::vector<int> canonical_code(const PlaneGraph& graph);

}  // namespace squares
