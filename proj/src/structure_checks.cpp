#include "squares/structure_checks.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "squares/error.hpp"
#include "squares/square_ops.hpp"

namespace squares {

DegeneracyOrder degeneracy_order(const SimpleGraph& g) {
  const int n = g.num_vertices();
  std::vector<int> residual(static_cast<std::size_t>(n));
  std::set<std::pair<int, VertexId>> queue;
  for (VertexId v = 0; v < n; ++v) {
    residual[static_cast<std::size_t>(v)] = g.degree(v);
    queue.emplace(g.degree(v), v);
  }
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  DegeneracyOrder out;
  out.order.reserve(static_cast<std::size_t>(n));
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[static_cast<std::size_t>(v)] = 1;
    out.order.push_back(v);
    out.k = std::max(out.k, d);
    for (VertexId u : g.neighbors(v)) {
      if (removed[static_cast<std::size_t>(u)]) continue;
      auto& r = residual[static_cast<std::size_t>(u)];
      queue.erase({r, u});
      --r;
      queue.emplace(r, u);
    }
  }
  return out;
}

DegeneracyOrder degeneracy_order(const PlaneGraph& graph) {
  auto out = degeneracy_order(graph.to_simple());
  if (out.k > 5) fail(ErrorKind::InvariantViolation, "plane graph with degeneracy " + std::to_string(out.k));
  return out;
}

const char* to_string(ColoringResult::Method method) {
  return method == ColoringResult::Method::greedy_square ? "greedy_square" : "contraction";
}

bool is_proper_square_coloring(const SimpleGraph& g, const std::vector<int>& color) {
  if (static_cast<int>(color.size()) != g.num_vertices()) return false;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (color[static_cast<std::size_t>(v)] < 0) return false;
    for (VertexId u : g.neighbors(v)) {
      if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) return false;
      for (VertexId w : g.neighbors(u))
        if (w != v && color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) return false;
    }
  }
  return true;
}

namespace {

int least_absent(const std::vector<VertexId>& ball, VertexId self, const std::vector<int>& color) {
  std::vector<char> used(ball.size() + 1, 0);
  for (VertexId u : ball) {
    if (u == self) continue;
    int c = color[static_cast<std::size_t>(u)];
    if (c >= 0 && c < static_cast<int>(used.size())) used[static_cast<std::size_t>(c)] = 1;
  }
  int c = 0;
  while (used[static_cast<std::size_t>(c)]) ++c;
  return c;
}

int colour_count(const std::vector<int>& color) {
  return color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
}

}  // namespace

ColoringResult greedy_square_color(const PlaneGraph& graph) {
  const SimpleGraph g = graph.to_simple();
  const SimpleGraph sq = square(g);
  auto order = degeneracy_order(g).order;
  std::vector<int> color(static_cast<std::size_t>(g.num_vertices()), -1);
  std::vector<VertexId> ball;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto nbrs = sq.neighbors(*it);
    ball.assign(nbrs.begin(), nbrs.end());
    color[static_cast<std::size_t>(*it)] = least_absent(ball, *it, color);
  }
  return {color, colour_count(color), ColoringResult::Method::greedy_square};
}

ColoringResult contraction_color(const PlaneGraph& graph) {
  struct Level {
    PlaneGraph graph;
    VertexId v;
    std::vector<VertexId> mapping;
  };
  std::vector<Level> levels;
  PlaneGraph current = graph;
  while (current.num_vertices() > 0) {
    LemmaAWitness witness = lemma_a_witness(current);
    VertexId v = witness.v;
    Relabeled next = current.degree(v) <= 1 ? remove_vertex(current, v)
                                            : contract_edge(current, v, witness.neighbors.front());
    levels.push_back({std::move(current), v, std::move(next.mapping)});
    current = std::move(next.graph);
  }

  std::vector<int> color;
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    std::vector<int> lifted(static_cast<std::size_t>(it->graph.num_vertices()), -1);
    for (VertexId u = 0; u < it->graph.num_vertices(); ++u)
      if (u != it->v) lifted[static_cast<std::size_t>(u)] = color[static_cast<std::size_t>(it->mapping[static_cast<std::size_t>(u)])];
    auto ball = dist2_closed_neighborhood(it->graph, it->v);
    lifted[static_cast<std::size_t>(it->v)] = least_absent(ball, it->v, lifted);
    color = std::move(lifted);
  }
  return {color, colour_count(color), ColoringResult::Method::contraction};
}

bool witness_holds(const SimpleGraph& g, const LemmaAWitness& w) {
  if (w.v < 0 || w.v >= g.num_vertices()) return false;
  const int s = g.degree(w.v);
  if (static_cast<int>(w.neighbors.size()) != s || w.degrees.size() != w.neighbors.size()) return false;
  for (std::size_t i = 0; i < w.neighbors.size(); ++i) {
    if (!g.has_edge(w.v, w.neighbors[i]) || g.degree(w.neighbors[i]) != w.degrees[i]) return false;
    if (i > 0 && w.degrees[i - 1] > w.degrees[i]) return false;
  }
  const auto& d = w.degrees;
  switch (w.lemma_case) {
    case 1: return s <= 2;
    case 2: return s == 3 && d[0] <= 10;
    case 3: return s == 4 && d[0] + d[1] <= 15 && d[1] <= 10;
    case 4: return s == 5 && d[0] + d[1] + d[2] <= 18 && d[2] <= 7;
    default: return false;
  }
}

LemmaAWitness lemma_a_witness(const SimpleGraph& g) {
  std::vector<VertexId> order(static_cast<std::size_t>(g.num_vertices()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return g.degree(a) < g.degree(b); });
  for (VertexId v : order) {
    const int s = g.degree(v);
    if (s > 5) break;
    LemmaAWitness w;
    w.v = v;
    auto nbrs = g.neighbors(v);
    w.neighbors.assign(nbrs.begin(), nbrs.end());
    std::stable_sort(w.neighbors.begin(), w.neighbors.end(),
                     [&](VertexId a, VertexId b) { return g.degree(a) < g.degree(b); });
    for (VertexId u : w.neighbors) w.degrees.push_back(g.degree(u));
    w.lemma_case = s <= 2 ? 1 : s - 1;
    if (witness_holds(g, w)) return w;
  }
  fail(ErrorKind::WitnessNotFound, "no vertex satisfies any of the four structural cases");
}

LemmaAWitness lemma_a_witness(const PlaneGraph& graph) { return lemma_a_witness(graph.to_simple()); }

}  // namespace squares
