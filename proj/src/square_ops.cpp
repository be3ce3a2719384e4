#include "squares/square_ops.hpp"

#include <algorithm>

#include "squares/error.hpp"

namespace squares {

namespace {

// Marks N(v) and N(N(v)) into `scratch` using `stamp` to avoid clearing.
void collect_ball(const SimpleGraph& g, VertexId v, std::vector<int>& scratch, int stamp,
                  std::vector<VertexId>& out) {
  out.clear();
  scratch[static_cast<std::size_t>(v)] = stamp;
  for (VertexId u : g.neighbors(v)) {
    if (scratch[static_cast<std::size_t>(u)] != stamp) {
      scratch[static_cast<std::size_t>(u)] = stamp;
      out.push_back(u);
    }
    for (VertexId w : g.neighbors(u))
      if (scratch[static_cast<std::size_t>(w)] != stamp) {
        scratch[static_cast<std::size_t>(w)] = stamp;
        out.push_back(w);
      }
  }
}

}  // namespace

SimpleGraph square(const SimpleGraph& graph) {
  const int n = graph.num_vertices();
  std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(n));
  std::vector<int> scratch(static_cast<std::size_t>(n), -1);
  std::vector<VertexId> ball;
  for (VertexId v = 0; v < n; ++v) {
    collect_ball(graph, v, scratch, v, ball);
    adj[static_cast<std::size_t>(v)] = ball;
  }
  return SimpleGraph::from_adjacency(std::move(adj));
}

SimpleGraph square(const PlaneGraph& graph) { return square(graph.to_simple()); }

std::vector<VertexId> dist2_closed_neighborhood(const SimpleGraph& graph, VertexId v) {
  if (v < 0 || v >= graph.num_vertices()) fail(ErrorKind::InvalidArgument, "vertex out of range");
  std::vector<int> scratch(static_cast<std::size_t>(graph.num_vertices()), -1);
  std::vector<VertexId> ball;
  collect_ball(graph, v, scratch, 0, ball);
  ball.push_back(v);
  std::sort(ball.begin(), ball.end());
  return ball;
}

std::vector<VertexId> dist2_closed_neighborhood(const PlaneGraph& graph, VertexId v) {
  return dist2_closed_neighborhood(graph.to_simple(), v);
}

}  // namespace squares
