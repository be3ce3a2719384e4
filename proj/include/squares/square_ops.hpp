#pragma once

#include <vector>

#include "squares/plane_graph.hpp"
#include "squares/simple_graph.hpp"

namespace squares {

// uv is an edge of the result iff 1 <= dist(u, v) <= 2.
SimpleGraph square(const SimpleGraph& graph);
SimpleGraph square(const PlaneGraph& graph);

// {v} plus every vertex within distance 2 of v, sorted.
std::vector<VertexId> dist2_closed_neighborhood(const SimpleGraph& graph, VertexId v);
std::vector<VertexId> dist2_closed_neighborhood(const PlaneGraph& graph, VertexId v);

}  // namespace squares
