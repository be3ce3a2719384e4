#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "squares/plane_graph.hpp"

namespace squares {

struct Triple {
  VertexId x = kNoVertex;
  VertexId y = kNoVertex;
  VertexId z = kNoVertex;
  std::array<VertexId, 3> as_array() const { return {x, y, z}; }
  friend bool operator==(const Triple&, const Triple&) = default;
};

struct WegnerGraph {
  PlaneGraph graph;
  // The triple whose candidate set is the whole extremal vertex set.
  Triple triple;
};

struct GenSeed {
  std::uint64_t seed = 0;
  int n = 0;
};

/// Extremal graph of maximum degree 2s on 3s+1 vertices with diameter 2.
/// Built from x, y, z and s common neighbours per pair, followed by two
/// contractions that pull one xy-neighbour and one xz-neighbour into x.
/// The result has the path y-x-z. Requires s >= 1.
WegnerGraph wegner_even(int s);

/// Odd maximum degree D = 2s+1: path y-x-z with s common neighbours of y,z,
/// s of x,z and s-1 of x,y. Order 3s+2 = floor(3D/2)+1. Requires odd D >= 3.
WegnerGraph wegner_odd(int max_degree);

/// Maximal plane graph grown from a triangle by inserting each new vertex
/// into a uniformly random triangular face. Requires n >= 3.
PlaneGraph random_triangulation(GenSeed seed);

/// Keeps each edge independently with probability keep_prob.
PlaneGraph sparsify(const PlaneGraph& graph, double keep_prob, std::uint64_t seed);

/// wegner_even(s) plus `pendants` degree-1 vertices hung off original
/// vertices of degree < 2s, so the maximum degree stays 2s.
/// Throws CannotPreserveMaxDegree when no attachment site exists.
WegnerGraph wegner_perturbed(int s, int pendants, std::uint64_t seed);

/// Random triangulation on `n` vertices, then neighbours are contracted into
/// one hub vertex until its degree reaches `hub_degree` (or no neighbour is
/// left to absorb). Produces plane instances with a dominant high-degree vertex.
PlaneGraph hub_triangulation(GenSeed seed, int hub_degree);

// Rotation text format: "n m" then one "v: u1 u2 ... uk" line per vertex
// listing the clockwise rotation; '#' starts a comment.
// Throws SyntaxError (with line) or any PlaneGraph construction error.
PlaneGraph parse_rotation(std::string_view text);
std::string serialize_rotation(const PlaneGraph& graph);

}  // namespace squares
