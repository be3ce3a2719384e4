#include "squares/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>

#include "squares/error.hpp"
#include "text_util.hpp"

namespace squares {

namespace {

struct Point {
  double x;
  double y;
};

// Straight-line drawing to rotation system: neighbours sorted by decreasing
// angle, i.e. clockwise.
PlaneGraph from_drawing(const std::vector<Point>& pts, const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::vector<std::vector<std::pair<double, VertexId>>> around(pts.size());
  for (auto [u, v] : edges) {
    const Point& pu = pts[static_cast<std::size_t>(u)];
    const Point& pv = pts[static_cast<std::size_t>(v)];
    around[static_cast<std::size_t>(u)].emplace_back(std::atan2(pv.y - pu.y, pv.x - pu.x), v);
    around[static_cast<std::size_t>(v)].emplace_back(std::atan2(pu.y - pv.y, pu.x - pv.x), u);
  }
  std::vector<Rotation> rot(pts.size());
  for (std::size_t v = 0; v < pts.size(); ++v) {
    auto& a = around[v];
    std::sort(a.begin(), a.end(), [](const auto& l, const auto& r) { return l.first > r.first; });
    for (const auto& [angle, u] : a) rot[v].push_back(u);
  }
  return PlaneGraph::from_rotation(std::move(rot));
}

// Three terminals y=(-1,0), x=(1,0), z=(0,sqrt3) and, for each pair, a
// family of common neighbours. With `inner` set, the first member of each
// family sits just inside the triangle; the rest are fanned outward beyond
// the side, so families occupy disjoint regions of the drawing.
struct TerminalLayout {
  std::vector<Point> pts;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<VertexId> family_first;  // first id of the xy, xz, yz families

  static constexpr VertexId kX = 0;
  static constexpr VertexId kY = 1;
  static constexpr VertexId kZ = 2;

  TerminalLayout() { pts = {{1.0, 0.0}, {-1.0, 0.0}, {0.0, std::sqrt(3.0)}}; }

  void add_family(VertexId p, VertexId q, int count, bool inner) {
    family_first.push_back(static_cast<VertexId>(pts.size()));
    const Point centroid{0.0, std::sqrt(3.0) / 3.0};
    const Point& a = pts[static_cast<std::size_t>(p)];
    const Point& b = pts[static_cast<std::size_t>(q)];
    Point mid{(a.x + b.x) / 2, (a.y + b.y) / 2};
    Point out{mid.x - centroid.x, mid.y - centroid.y};
    double len = std::hypot(out.x, out.y);
    out = {out.x / len, out.y / len};
    for (int i = 0; i < count; ++i) {
      double offset = inner ? (i == 0 ? -0.2 : static_cast<double>(i)) : static_cast<double>(i + 1);
      auto id = static_cast<VertexId>(pts.size());
      pts.push_back({mid.x + out.x * offset, mid.y + out.y * offset});
      edges.emplace_back(p, id);
      edges.emplace_back(q, id);
    }
  }
};

}  // namespace

WegnerGraph wegner_even(int s) {
  if (s < 1) fail(ErrorKind::InvalidArgument, "wegner_even requires s >= 1");
  TerminalLayout layout;
  using L = TerminalLayout;
  layout.add_family(L::kX, L::kY, s, true);
  layout.add_family(L::kX, L::kZ, s, true);
  layout.add_family(L::kY, L::kZ, s, true);
  PlaneGraph g = from_drawing(layout.pts, layout.edges);

  VertexId a = layout.family_first[0];
  VertexId b = layout.family_first[1];
  Relabeled first = contract_edge(g, a, L::kX);
  VertexId x = first.merged;
  Relabeled second = contract_edge(first.graph, first.mapping[static_cast<std::size_t>(b)], x);
  auto track = [&](VertexId v) {
    return second.mapping[static_cast<std::size_t>(first.mapping[static_cast<std::size_t>(v)])];
  };
  return {std::move(second.graph), {track(L::kX), track(L::kY), track(L::kZ)}};
}

WegnerGraph wegner_odd(int max_degree) {
  if (max_degree < 3 || max_degree % 2 == 0) fail(ErrorKind::InvalidArgument, "wegner_odd requires odd D >= 3");
  const int s = (max_degree - 1) / 2;
  TerminalLayout layout;
  using L = TerminalLayout;
  layout.edges.emplace_back(L::kX, L::kY);
  layout.edges.emplace_back(L::kX, L::kZ);
  layout.add_family(L::kX, L::kY, s - 1, false);
  layout.add_family(L::kX, L::kZ, s, false);
  layout.add_family(L::kY, L::kZ, s, false);
  return {from_drawing(layout.pts, layout.edges), {L::kX, L::kY, L::kZ}};
}

PlaneGraph random_triangulation(GenSeed seed) {
  const int n = seed.n;
  if (n < 3) fail(ErrorKind::InvalidArgument, "random_triangulation requires n >= 3");
  std::mt19937_64 rng(seed.seed);
  std::vector<Rotation> rot(static_cast<std::size_t>(n));
  rot[0] = {1, 2};
  rot[1] = {2, 0};
  rot[2] = {0, 1};
  // (a, b, c): darts a->b, b->c, c->a bound one triangular face.
  std::vector<std::array<VertexId, 3>> tri{{0, 1, 2}, {0, 2, 1}};

  auto insert_after = [&](VertexId at, VertexId after, VertexId v) {
    auto& r = rot[static_cast<std::size_t>(at)];
    auto it = std::find(r.begin(), r.end(), after);
    r.insert(it + 1, v);
  };
  for (VertexId v = 3; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> pick(0, tri.size() - 1);
    std::size_t f = pick(rng);
    auto [a, b, c] = tri[f];
    insert_after(b, a, v);
    insert_after(c, b, v);
    insert_after(a, c, v);
    rot[static_cast<std::size_t>(v)] = {a, c, b};
    tri[f] = {a, b, v};
    tri.push_back({b, c, v});
    tri.push_back({c, a, v});
  }
  return PlaneGraph::from_rotation(std::move(rot));
}

PlaneGraph sparsify(const PlaneGraph& graph, double keep_prob, std::uint64_t seed) {
  if (!(keep_prob >= 0.0 && keep_prob <= 1.0)) fail(ErrorKind::InvalidArgument, "keep_prob must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution keep(keep_prob);
  std::vector<std::vector<VertexId>> kept(static_cast<std::size_t>(graph.num_vertices()));
  for (VertexId u = 0; u < graph.num_vertices(); ++u)
    for (VertexId v : graph.rotation(u))
      if (u < v && keep(rng)) {
        kept[static_cast<std::size_t>(u)].push_back(v);
        kept[static_cast<std::size_t>(v)].push_back(u);
      }
  for (auto& k : kept) std::sort(k.begin(), k.end());
  std::vector<Rotation> rot(static_cast<std::size_t>(graph.num_vertices()));
  for (VertexId u = 0; u < graph.num_vertices(); ++u) {
    const auto& k = kept[static_cast<std::size_t>(u)];
    for (VertexId v : graph.rotation(u))
      if (std::binary_search(k.begin(), k.end(), v)) rot[static_cast<std::size_t>(u)].push_back(v);
  }
  return PlaneGraph::from_rotation(std::move(rot));
}

WegnerGraph wegner_perturbed(int s, int pendants, std::uint64_t seed) {
  if (pendants < 0) fail(ErrorKind::InvalidArgument, "pendant count must be non-negative");
  WegnerGraph base = wegner_even(s);
  if (pendants == 0) return base;
  const int original = base.graph.num_vertices();
  const int cap = 2 * s;
  std::mt19937_64 rng(seed);
  std::vector<Rotation> rot = base.graph.rotations();
  for (int p = 0; p < pendants; ++p) {
    std::vector<VertexId> sites;
    for (VertexId v = 0; v < original; ++v)
      if (static_cast<int>(rot[static_cast<std::size_t>(v)].size()) < cap) sites.push_back(v);
    if (sites.empty()) fail(ErrorKind::CannotPreserveMaxDegree, "no vertex of degree below " + std::to_string(cap));
    VertexId site = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)];
    auto& r = rot[static_cast<std::size_t>(site)];
    std::size_t at = std::uniform_int_distribution<std::size_t>(0, r.size())(rng);
    auto pendant = static_cast<VertexId>(rot.size());
    r.insert(r.begin() + static_cast<std::ptrdiff_t>(at), pendant);
    rot.push_back({site});
  }
  return {PlaneGraph::from_rotation(std::move(rot)), base.triple};
}

PlaneGraph hub_triangulation(GenSeed seed, int hub_degree) {
  PlaneGraph g = random_triangulation(seed);
  std::mt19937_64 rng(seed.seed ^ 0x9e3779b97f4a7c15ULL);
  VertexId hub = 0;
  for (VertexId v = 1; v < g.num_vertices(); ++v)
    if (g.degree(v) > g.degree(hub)) hub = v;
  while (g.degree(hub) < hub_degree && g.degree(hub) < g.num_vertices() - 1) {
    auto rot = g.rotation(hub);
    VertexId v = rot[std::uniform_int_distribution<std::size_t>(0, rot.size() - 1)(rng)];
    Relabeled r = contract_edge(g, v, hub);
    hub = r.merged;
    g = std::move(r.graph);
  }
  return g;
}

PlaneGraph parse_rotation(std::string_view text) {
  auto lines = detail::meaningful_lines(text);
  if (lines.empty()) fail(ErrorKind::SyntaxError, "missing \"n m\" header", 1);
  auto header = detail::split_ws(lines[0].body);
  auto n = header.size() == 2 ? detail::parse_int(header[0]) : std::nullopt;
  auto m = header.size() == 2 ? detail::parse_int(header[1]) : std::nullopt;
  if (!n || !m || *n < 0 || *m < 0) fail(ErrorKind::SyntaxError, "header must be \"n m\"", lines[0].number);

  std::vector<Rotation> rot(static_cast<std::size_t>(*n));
  std::vector<char> seen(rot.size(), 0);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    auto colon = line.body.find(':');
    if (colon == std::string_view::npos) fail(ErrorKind::SyntaxError, "expected \"v: u1 u2 ...\"", line.number);
    auto head = detail::split_ws(line.body.substr(0, colon));
    auto v = head.size() == 1 ? detail::parse_int(head[0]) : std::nullopt;
    if (!v || *v < 0 || *v >= *n) fail(ErrorKind::SyntaxError, "bad vertex id", line.number);
    if (seen[static_cast<std::size_t>(*v)]) fail(ErrorKind::SyntaxError, "vertex listed twice", line.number);
    seen[static_cast<std::size_t>(*v)] = 1;
    for (auto token : detail::split_ws(line.body.substr(colon + 1))) {
      auto u = detail::parse_int(token);
      if (!u || *u < 0 || *u >= *n) fail(ErrorKind::SyntaxError, "bad neighbour id", line.number);
      rot[static_cast<std::size_t>(*v)].push_back(static_cast<VertexId>(*u));
    }
  }
  for (std::size_t v = 0; v < seen.size(); ++v)
    if (!seen[v]) fail(ErrorKind::SyntaxError, "no rotation line for vertex " + std::to_string(v), lines.back().number);
  PlaneGraph g = PlaneGraph::from_rotation(std::move(rot));
  if (g.num_edges() != *m) fail(ErrorKind::SyntaxError, "edge count does not match header", lines[0].number);
  return g;
}

std::string serialize_rotation(const PlaneGraph& graph) {
  std::string out = std::to_string(graph.num_vertices()) + " " + std::to_string(graph.num_edges()) + "\n";
  for (VertexId v = 0; v < graph.num_vertices(); ++v) {
    out += std::to_string(v) + ":";
    for (VertexId u : graph.rotation(v)) out += " " + std::to_string(u);
    out += "\n";
  }
  return out;
}

}  // namespace squares
