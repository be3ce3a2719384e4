#include "squares/plane_graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>
#include <tuple>

#include "squares/error.hpp"

namespace squares {

namespace {

std::string edge_name(VertexId u, VertexId v) { return std::to_string(u) + "-" + std::to_string(v); }

// Dart ids: offsets[v] + i is the dart leaving v along rotation(v)[i].
std::vector<int> dart_offsets(const std::vector<Rotation>& rot) {
  std::vector<int> off(rot.size() + 1, 0);
  for (std::size_t v = 0; v < rot.size(); ++v) off[v + 1] = off[v] + static_cast<int>(rot[v].size());
  return off;
}

std::vector<int> component_labels(const std::vector<Rotation>& rot) {
  std::vector<int> comp(rot.size(), -1);
  int next = 0;
  for (std::size_t s = 0; s < rot.size(); ++s) {
    if (comp[s] != -1) continue;
    std::deque<VertexId> queue{static_cast<VertexId>(s)};
    comp[s] = next;
    while (!queue.empty()) {
      VertexId u = queue.front();
      queue.pop_front();
      for (VertexId w : rot[static_cast<std::size_t>(u)])
        if (comp[static_cast<std::size_t>(w)] == -1) {
          comp[static_cast<std::size_t>(w)] = next;
          queue.push_back(w);
        }
    }
    ++next;
  }
  return comp;
}

}  // namespace

PlaneGraph PlaneGraph::from_rotation(std::vector<Rotation> rotations) {
  const int n = static_cast<int>(rotations.size());
  PlaneGraph g;
  g.sorted_.resize(rotations.size());
  long long darts = 0;
  for (VertexId v = 0; v < n; ++v) {
    auto& sorted = g.sorted_[idx(v)];
    const auto& rot = rotations[idx(v)];
    sorted.reserve(rot.size());
    for (int i = 0; i < static_cast<int>(rot.size()); ++i) {
      VertexId u = rot[static_cast<std::size_t>(i)];
      if (u < 0 || u >= n) fail(ErrorKind::InvalidArgument, "neighbour id out of range at vertex " + std::to_string(v));
      if (u == v) fail(ErrorKind::SelfLoopOrMultiEdge, "self-loop at vertex " + std::to_string(v));
      sorted.emplace_back(u, i);
    }
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i)
      if (sorted[i].first == sorted[i - 1].first)
        fail(ErrorKind::SelfLoopOrMultiEdge, "repeated edge " + edge_name(v, sorted[i].first));
    darts += static_cast<long long>(rot.size());
  }
  g.rotations_ = std::move(rotations);
  for (VertexId v = 0; v < n; ++v)
    for (VertexId u : g.rotations_[idx(v)])
      if (g.position(u, v) < 0) fail(ErrorKind::AsymmetricAdjacency, "edge " + edge_name(v, u) + " has no reverse entry");
  g.edges_ = static_cast<int>(darts / 2);

  auto chi = euler_characteristics(g);
  for (std::size_t c = 0; c < chi.size(); ++c)
    if (chi[c] != 2)
      fail(ErrorKind::NonPlanarEmbedding,
           "component " + std::to_string(c) + " has Euler characteristic " + std::to_string(chi[c]));
  return g;
}

PlaneGraph build_from_rotation(int n, std::vector<Rotation> rotations) {
  if (n < 0 || static_cast<int>(rotations.size()) != n)
    fail(ErrorKind::InvalidArgument, "expected " + std::to_string(n) + " rotations, got " + std::to_string(rotations.size()));
  return PlaneGraph::from_rotation(std::move(rotations));
}

int PlaneGraph::max_degree() const {
  int best = 0;
  for (const auto& r : rotations_) best = std::max(best, static_cast<int>(r.size()));
  return best;
}

int PlaneGraph::position(VertexId v, VertexId u) const {
  const auto& sorted = sorted_[idx(v)];
  auto it = std::lower_bound(sorted.begin(), sorted.end(), std::pair<VertexId, int>{u, -1});
  if (it == sorted.end() || it->first != u) return -1;
  return it->second;
}

bool PlaneGraph::has_edge(VertexId u, VertexId v) const { return position(u, v) >= 0; }

VertexId PlaneGraph::successor(VertexId v, VertexId u) const {
  int p = position(v, u);
  if (p < 0) fail(ErrorKind::NotAnEdge, edge_name(v, u) + " is not an edge");
  const auto& rot = rotations_[idx(v)];
  return rot[(static_cast<std::size_t>(p) + 1) % rot.size()];
}

SimpleGraph PlaneGraph::to_simple() const { return SimpleGraph::from_adjacency(rotations_); }

std::vector<VertexId> FaceWalk::vertices() const {
  std::vector<VertexId> out;
  out.reserve(boundary.size());
  for (const auto& d : boundary) out.push_back(d.from);
  return out;
}

namespace {

// Traces all faces; face_of[dart] receives the face index.
std::vector<FaceWalk> trace_faces(const PlaneGraph& g, std::vector<int>* face_of_out) {
  const auto& rot = g.rotations();
  auto off = dart_offsets(rot);
  std::vector<int> face_of(static_cast<std::size_t>(off.back()), -1);
  std::vector<FaceWalk> out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    for (int i = 0; i < g.degree(v); ++i) {
      int start = off[static_cast<std::size_t>(v)] + i;
      if (face_of[static_cast<std::size_t>(start)] != -1) continue;
      FaceWalk walk;
      VertexId from = v;
      int pos = i;
      while (true) {
        int dart = off[static_cast<std::size_t>(from)] + pos;
        if (face_of[static_cast<std::size_t>(dart)] != -1) break;
        face_of[static_cast<std::size_t>(dart)] = static_cast<int>(out.size());
        VertexId to = rot[static_cast<std::size_t>(from)][static_cast<std::size_t>(pos)];
        walk.boundary.push_back({from, to});
        int back = g.position(to, from);
        pos = (back + 1) % g.degree(to);
        from = to;
      }
      out.push_back(std::move(walk));
    }
  }
  if (face_of_out) *face_of_out = std::move(face_of);
  return out;
}

}  // namespace

std::vector<FaceWalk> faces(const PlaneGraph& graph) { return trace_faces(graph, nullptr); }

std::vector<int> euler_characteristics(const PlaneGraph& graph) {
  auto comp = component_labels(graph.rotations());
  int components = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<int> vertices(static_cast<std::size_t>(components), 0);
  std::vector<int> darts(vertices.size(), 0);
  std::vector<int> face_count(vertices.size(), 0);
  for (VertexId v = 0; v < graph.num_vertices(); ++v) {
    auto c = static_cast<std::size_t>(comp[static_cast<std::size_t>(v)]);
    vertices[c] += 1;
    darts[c] += graph.degree(v);
    if (graph.degree(v) == 0) face_count[c] += 1;
  }
  for (const auto& f : faces(graph))
    face_count[static_cast<std::size_t>(comp[static_cast<std::size_t>(f.boundary.front().from)])] += 1;
  std::vector<int> chi(vertices.size());
  for (std::size_t c = 0; c < chi.size(); ++c) chi[c] = vertices[c] - darts[c] / 2 + face_count[c];
  return chi;
}

namespace {

// Drops `removed` (if any) and renumbers so that the old last vertex takes
// the freed id. Entries equal to kNoVertex after mapping are discarded.
Relabeled relabel_without(std::vector<Rotation> rot, VertexId removed, VertexId absorbed_into) {
  const int n = static_cast<int>(rot.size());
  std::vector<VertexId> mapping(rot.size());
  std::iota(mapping.begin(), mapping.end(), 0);
  const VertexId last = n - 1;
  if (removed != last) mapping[static_cast<std::size_t>(last)] = removed;
  mapping[static_cast<std::size_t>(removed)] = kNoVertex;
  if (absorbed_into != kNoVertex)
    mapping[static_cast<std::size_t>(removed)] = mapping[static_cast<std::size_t>(absorbed_into)];

  std::vector<Rotation> out(static_cast<std::size_t>(n - 1));
  for (VertexId v = 0; v < n; ++v) {
    if (v == removed) continue;
    Rotation r;
    r.reserve(rot[static_cast<std::size_t>(v)].size());
    for (VertexId u : rot[static_cast<std::size_t>(v)]) r.push_back(mapping[static_cast<std::size_t>(u)]);
    out[static_cast<std::size_t>(mapping[static_cast<std::size_t>(v)])] = std::move(r);
  }
  Relabeled result{PlaneGraph::from_rotation(std::move(out)), std::move(mapping), kNoVertex};
  if (absorbed_into != kNoVertex) result.merged = result.mapping[static_cast<std::size_t>(absorbed_into)];
  return result;
}

}  // namespace

Relabeled contract_edge(const PlaneGraph& graph, VertexId v, VertexId w) {
  const int n = graph.num_vertices();
  if (v < 0 || w < 0 || v >= n || w >= n || !graph.has_edge(v, w))
    fail(ErrorKind::NotAnEdge, edge_name(v, w) + " is not an edge");

  std::vector<Rotation> rot = graph.rotations();
  const Rotation& rv = rot[static_cast<std::size_t>(v)];
  const Rotation& rw = rot[static_cast<std::size_t>(w)];
  const int dv = graph.degree(v);
  const int dw = graph.degree(w);
  const int at_w = graph.position(w, v);
  const int at_v = graph.position(v, w);

  // Walk w's rotation from just after v back round to just before v, then
  // splice in v's rotation from just after w to just before w.
  Rotation merged;
  merged.reserve(static_cast<std::size_t>(dv + dw));
  for (int k = 1; k < dw; ++k) merged.push_back(rw[static_cast<std::size_t>((at_w + k) % dw)]);
  std::vector<VertexId> dropped;  // common neighbours: their edge to v is deleted
  for (int k = 1; k < dv; ++k) {
    VertexId u = rv[static_cast<std::size_t>((at_v + k) % dv)];
    if (graph.has_edge(u, w))
      dropped.push_back(u);
    else
      merged.push_back(u);
  }

  for (VertexId u : rv) {
    if (u == w) continue;
    auto& ru = rot[static_cast<std::size_t>(u)];
    if (std::find(dropped.begin(), dropped.end(), u) != dropped.end())
      ru.erase(std::find(ru.begin(), ru.end(), v));
    else
      *std::find(ru.begin(), ru.end(), v) = w;
  }
  rot[static_cast<std::size_t>(w)] = std::move(merged);
  rot[static_cast<std::size_t>(v)].clear();
  return relabel_without(std::move(rot), v, w);
}

Relabeled remove_vertex(const PlaneGraph& graph, VertexId v) {
  if (v < 0 || v >= graph.num_vertices()) fail(ErrorKind::InvalidArgument, "vertex out of range");
  std::vector<Rotation> rot = graph.rotations();
  for (VertexId u : graph.rotation(v)) {
    auto& ru = rot[static_cast<std::size_t>(u)];
    ru.erase(std::find(ru.begin(), ru.end(), v));
  }
  rot[static_cast<std::size_t>(v)].clear();
  return relabel_without(std::move(rot), v, kNoVertex);
}

void validate_cycle(const PlaneGraph& graph, const CycleSpec& cycle) {
  const auto& c = cycle.vertices;
  if (c.size() < 3) fail(ErrorKind::InvalidCycle, "a cycle needs at least 3 vertices");
  std::vector<VertexId> sorted = c;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(ErrorKind::InvalidCycle, "cycle repeats a vertex");
  for (VertexId v : c)
    if (v < 0 || v >= graph.num_vertices()) fail(ErrorKind::InvalidCycle, "cycle vertex out of range");
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!graph.has_edge(c[i], c[(i + 1) % c.size()]))
      fail(ErrorKind::InvalidCycle, "cycle step " + edge_name(c[i], c[(i + 1) % c.size()]) + " is not an edge");
}

bool cycle_separates(const PlaneGraph& graph, const CycleSpec& cycle, VertexId a, VertexId b) {
  validate_cycle(graph, cycle);
  const auto& c = cycle.vertices;
  if (std::find(c.begin(), c.end(), a) != c.end() || std::find(c.begin(), c.end(), b) != c.end())
    fail(ErrorKind::VertexOnCycle, "query vertex lies on the cycle");
  if (a == b) return false;

  std::vector<char> blocked(static_cast<std::size_t>(graph.num_vertices()), 0);
  for (VertexId v : c) blocked[static_cast<std::size_t>(v)] = 1;
  std::vector<VertexId> stack{a};
  blocked[static_cast<std::size_t>(a)] = 1;
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (VertexId w : graph.rotation(u)) {
      if (w == b) return false;
      if (!blocked[static_cast<std::size_t>(w)]) {
        blocked[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  return true;
}

std::optional<VertexId> remark1_common_neighbor(const PlaneGraph& graph, const CycleSpec& c1, const CycleSpec& c2,
                                                VertexId a, VertexId b) {
  if (!cycle_separates(graph, c1, a, b) || !cycle_separates(graph, c2, a, b))
    fail(ErrorKind::PreconditionViolated, "a and b are not separated by both cycles");
  // Separated vertices are non-adjacent, so distance <= 2 means a common
  // neighbour exists, and any common neighbour off a cycle would join a and b
  // in the same component of G minus that cycle.
  auto on = [](const CycleSpec& c, VertexId v) {
    return std::find(c.vertices.begin(), c.vertices.end(), v) != c.vertices.end();
  };
  for (VertexId z : graph.rotation(a))
    if (graph.has_edge(z, b) && on(c1, z) && on(c2, z)) return z;
  return std::nullopt;
}

namespace {

struct FaceKey {
  VertexId lowest;
  int length;
  std::size_t order;
  auto operator<=>(const FaceKey&) const = default;
};

// One chord insertion, or false at the fixpoint.
bool add_one_chord(const PlaneGraph& g, std::vector<Rotation>& rot) {
  auto walks = faces(g);
  std::vector<FaceKey> keys;
  for (std::size_t i = 0; i < walks.size(); ++i) {
    auto vs = walks[i].vertices();
    keys.push_back({*std::min_element(vs.begin(), vs.end()), walks[i].length(), i});
  }
  std::sort(keys.begin(), keys.end());

  for (const auto& key : keys) {
    if (key.length < 4) continue;
    const auto& walk = walks[key.order];
    const int len = walk.length();
    for (int p = 0; p < len; ++p) {
      VertexId from = walk.boundary[static_cast<std::size_t>(p)].from;
      if (g.degree(from) > kDiagonalizeDegreeLimit) continue;
      for (int offset = 2; offset <= len - 2; ++offset) {
        int q = (p + offset) % len;
        VertexId to = walk.boundary[static_cast<std::size_t>(q)].from;
        if (to == from || g.has_edge(from, to)) continue;
        // Corner at u_p sits just before the outgoing neighbour u_{p+1};
        // inserting there places the chord inside this face.
        int at_from = g.position(from, walk.boundary[static_cast<std::size_t>(p)].to);
        int at_to = g.position(to, walk.boundary[static_cast<std::size_t>(q)].to);
        auto& rf = rot[static_cast<std::size_t>(from)];
        auto& rt = rot[static_cast<std::size_t>(to)];
        rf.insert(rf.begin() + at_from, to);
        rt.insert(rt.begin() + at_to, from);
        return true;
      }
    }
  }
  return false;
}

}  // namespace

PlaneGraph diagonalize(const PlaneGraph& graph) {
  PlaneGraph current = graph;
  while (true) {
    std::vector<Rotation> rot = current.rotations();
    if (!add_one_chord(current, rot)) return current;
    current = PlaneGraph::from_rotation(std::move(rot));
  }
}

std::vector<int> canonical_code(const PlaneGraph& graph) {
  const int n = graph.num_vertices();
  if (n == 0) return {};
  auto comp = component_labels(graph.rotations());
  if (*std::max_element(comp.begin(), comp.end()) != 0)
    fail(ErrorKind::InvalidArgument, "canonical_code requires a connected graph");
  if (n == 1) return {0, -1};

  std::vector<int> best;
  std::vector<int> label(static_cast<std::size_t>(n));
  std::vector<int> entry(static_cast<std::size_t>(n));
  std::vector<VertexId> order;
  std::vector<int> code;
  for (VertexId root = 0; root < n; ++root) {
    for (int first = 0; first < graph.degree(root); ++first) {
      std::fill(label.begin(), label.end(), -1);
      order.clear();
      code.clear();
      label[static_cast<std::size_t>(root)] = 0;
      entry[static_cast<std::size_t>(root)] = first;
      order.push_back(root);
      bool worse = false;
      for (std::size_t head = 0; head < order.size() && !worse; ++head) {
        VertexId u = order[head];
        auto rot = graph.rotation(u);
        const int d = static_cast<int>(rot.size());
        for (int k = 0; k < d; ++k) {
          VertexId w = rot[static_cast<std::size_t>((entry[static_cast<std::size_t>(u)] + k) % d)];
          if (label[static_cast<std::size_t>(w)] < 0) {
            label[static_cast<std::size_t>(w)] = static_cast<int>(order.size());
            entry[static_cast<std::size_t>(w)] = graph.position(w, u);
            order.push_back(w);
          }
          code.push_back(label[static_cast<std::size_t>(w)]);
        }
        code.push_back(-1);
        // Early exit once this prefix is already larger than the best code.
        if (!best.empty()) {
          auto mismatch = std::mismatch(code.begin(), code.end(), best.begin(), best.end());
          if (mismatch.first != code.end() && mismatch.second != best.end() && *mismatch.first > *mismatch.second)
            worse = true;
        }
      }
      if (!worse && (best.empty() || code < best)) best = code;
    }
  }
  return best;
}

}  // namespace squares
