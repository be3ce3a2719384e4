#include "squares/big_clique.hpp"

#include <algorithm>
#include <numeric>

#include "squares/error.hpp"
#include "squares/square_ops.hpp"

namespace squares {

namespace {

void require_budget(const SimpleGraph& g, int D) {
  if (D < kMinDegreeBudget) fail(ErrorKind::InvalidArgument, "degree budget D must be at least 19");
  if (g.max_degree() > D)
    fail(ErrorKind::DegreeBudgetViolated,
         "maximum degree " + std::to_string(g.max_degree()) + " exceeds D = " + std::to_string(D));
}

// Vertices in at least two of the three sets.
VertexSet majority(const VertexSet& a, const VertexSet& b, const VertexSet& c) {
  return (a & b) | (a & c) | (b & c);
}

bool is_square_clique(const VertexSet& s, const std::vector<VertexSet>& square_closed) {
  bool ok = true;
  s.for_each([&](VertexId v) {
    if (ok && !s.is_subset_of(square_closed[static_cast<std::size_t>(v)])) ok = false;
  });
  return ok;
}

std::vector<VertexId> by_degree_desc(const SimpleGraph& g) {
  std::vector<VertexId> order(static_cast<std::size_t>(g.num_vertices()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
  return order;
}

std::array<VertexId, 3> sorted3(VertexId a, VertexId b, VertexId c) {
  std::array<VertexId, 3> t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

// Visits every triple i<j<k of `order` whose degree sum is at least
// `min_sum` (all triples when min_sum is unset), skipping the rest in bulk.
template <class F>
void for_each_triple(const SimpleGraph& g, const std::vector<VertexId>& order, std::optional<int> min_sum, F&& f) {
  const std::size_t n = order.size();
  auto deg = [&](std::size_t i) { return g.degree(order[i]); };
  for (std::size_t i = 0; i + 2 < n; ++i) {
    if (min_sum && deg(i) + deg(i + 1) + deg(i + 2) < *min_sum) break;
    for (std::size_t j = i + 1; j + 1 < n; ++j) {
      if (min_sum && deg(i) + deg(j) + deg(j + 1) < *min_sum) break;
      for (std::size_t k = j + 1; k < n; ++k) {
        if (min_sum && deg(i) + deg(j) + deg(k) < *min_sum) break;
        f(order[i], order[j], order[k]);
      }
    }
  }
}

CliqueCertificate certificate_for(const SimpleGraph& base, std::vector<VertexId> members, std::optional<Triple> triple) {
  CliqueCertificate c;
  c.members = std::move(members);
  c.kind = triple ? CliqueCertificate::Kind::triple : CliqueCertificate::Kind::explicit_set;
  c.triple = triple;
  c.witnesses = square_witnesses(base, c.members);
  return c;
}

}  // namespace

TriplePattern candidate_set(const SimpleGraph& g, VertexId x, VertexId y, VertexId z) {
  const int n = g.num_vertices();
  for (VertexId v : {x, y, z})
    if (v < 0 || v >= n) fail(ErrorKind::InvalidArgument, "triple vertex out of range");
  if (x == y || y == z || x == z) fail(ErrorKind::DuplicateVertices, "triple vertices must be distinct");

  VertexSet cx = g.closed_neighborhood(x), cy = g.closed_neighborhood(y), cz = g.closed_neighborhood(z);
  VertexSet ox = cx, oy = cy, oz = cz;
  ox.reset(x);
  oy.reset(y);
  oz.reset(z);
  VertexSet s = majority(cx, cy, cz);

  VertexSet t(n);
  for (VertexId v : {x, y, z})
    if (s.test(v)) t.set(v);
  VertexSet w = ox & oy & oz;
  VertexSet tw = t | w;
  VertexSet xs = (oy & oz) - tw;
  VertexSet ys = (ox & oz) - tw;
  VertexSet zs = (ox & oy) - tw;

  TriplePattern p;
  p.triple = {x, y, z};
  p.S = s.to_vector();
  p.T = t.to_vector();
  p.W = w.to_vector();
  p.X = xs.to_vector();
  p.Y = ys.to_vector();
  p.Z = zs.to_vector();

  VertexSet joined = t | w | xs | ys | zs;
  if (p.sizes().total() != static_cast<int>(p.S.size()) || !(joined == s))
    fail(ErrorKind::InvariantViolation, "partition of the candidate set is not exact");
  return p;
}

TriplePattern candidate_set(const PlaneGraph& graph, VertexId x, VertexId y, VertexId z) {
  return candidate_set(graph.to_simple(), x, y, z);
}

CorollaryCertificate corollary_certificate(const SimpleGraph& g, const TriplePattern& p, int D) {
  if (g.max_degree() > D)
    fail(ErrorKind::DegreeBudgetViolated,
         "maximum degree " + std::to_string(g.max_degree()) + " exceeds D = " + std::to_string(D));
  const auto sz = p.sizes();
  auto d_t = [&](VertexId v) {
    return static_cast<int>(std::count_if(p.T.begin(), p.T.end(), [&](VertexId t) { return g.has_edge(v, t); }));
  };
  const auto [x, y, z] = p.triple;
  const int lhs_x = sz.Y + sz.Z + sz.W + d_t(x);
  const int lhs_y = sz.X + sz.Z + sz.W + d_t(y);
  const int lhs_z = sz.X + sz.Y + sz.W + d_t(z);
  if (lhs_x > g.degree(x) || lhs_y > g.degree(y) || lhs_z > g.degree(z))
    fail(ErrorKind::InvariantViolation, "degree inequality of the counting certificate fails");

  CorollaryCertificate c;
  for (VertexId t : p.T) c.t_degree_sum += d_t(t);
  // Floor division; the numerator can be negative only for inconsistent input.
  const int numerator = 3 * D - 3 * sz.W - c.t_degree_sum;
  const int half = numerator >= 0 ? numerator / 2 : -((-numerator + 1) / 2);
  c.bound = sz.T + sz.W + half;
  c.slack = c.bound - static_cast<int>(p.S.size());

  if (!p.T.empty()) {
    VertexSet reached(g.num_vertices());
    std::vector<VertexId> stack{p.T.front()};
    reached.set(p.T.front());
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      for (VertexId t : p.T)
        if (!reached.test(t) && g.has_edge(u, t)) {
          reached.set(t);
          stack.push_back(t);
        }
    }
    c.t_connected = sz.T >= 2 && reached.count() == sz.T;
  }
  if (c.t_connected) {
    if (c.t_degree_sum < 2 * (sz.T - 1)) fail(ErrorKind::InvariantViolation, "handshake bound on G[T] fails");
    if (c.bound > 3 * D / 2 + 1) fail(ErrorKind::InvariantViolation, "certificate bound exceeds floor(3D/2)+1");
  }
  return c;
}

std::optional<TriplePattern> find_big_clique(const SimpleGraph& g, BigSetQuery query, bool prune) {
  require_budget(g, query.D);
  const int threshold = query.threshold();
  if (g.num_vertices() < threshold) return std::nullopt;

  auto closed = g.closed_neighborhoods();
  auto square_closed = square(g).closed_neighborhoods();
  for (VertexId v = 0; v < g.num_vertices(); ++v) square_closed[static_cast<std::size_t>(v)].set(v);

  int best_size = -1;
  std::array<VertexId, 3> best{};
  std::optional<int> min_sum;
  if (prune) min_sum = query.D + 17;
  for_each_triple(g, by_degree_desc(g), min_sum, [&](VertexId a, VertexId b, VertexId c) {
    VertexSet s = majority(closed[static_cast<std::size_t>(a)], closed[static_cast<std::size_t>(b)],
                           closed[static_cast<std::size_t>(c)]);
    int size = s.count();
    if (size < threshold || size < best_size) return;
    auto key = sorted3(a, b, c);
    if (size == best_size && !(key < best)) return;
    if (!is_square_clique(s, square_closed)) return;
    best_size = size;
    best = key;
  });
  if (best_size < 0) return std::nullopt;
  return candidate_set(g, best[0], best[1], best[2]);
}

std::optional<TriplePattern> find_big_clique(const PlaneGraph& graph, BigSetQuery query, bool prune) {
  return find_big_clique(graph.to_simple(), query, prune);
}

std::optional<TriplePattern> find_defining_triple(const SimpleGraph& g, std::span<const VertexId> target) {
  const VertexSet want = VertexSet::of(g.num_vertices(), target);
  auto closed = g.closed_neighborhoods();
  std::optional<std::array<VertexId, 3>> best;
  // Every member outside the triple lies in two of the three neighbourhoods.
  const int min_sum = static_cast<int>(target.size()) - 3;
  for_each_triple(g, by_degree_desc(g), min_sum, [&](VertexId a, VertexId b, VertexId c) {
    auto key = sorted3(a, b, c);
    if (best && !(key < *best)) return;
    VertexSet s = majority(closed[static_cast<std::size_t>(a)], closed[static_cast<std::size_t>(b)],
                           closed[static_cast<std::size_t>(c)]);
    if (s == want) best = key;
  });
  if (!best) return std::nullopt;
  return candidate_set(g, (*best)[0], (*best)[1], (*best)[2]);
}

StructuredOmega omega_square_structured(const PlaneGraph& graph, int D, std::uint64_t budget) {
  const SimpleGraph g = graph.to_simple();
  require_budget(g, D);
  StructuredOmega out;
  if (auto big = find_big_clique(g, BigSetQuery{D})) {
    // Big enough to beat anything the capped search below could return.
    out.omega = static_cast<int>(big->S.size());
    out.certificate = certificate_for(g, big->S, big->triple);
    out.pattern = std::move(big);
    return out;
  }
  auto search = max_clique_exact(square(g), budget, D + 19);
  if (search.budget_exceeded)
    fail(ErrorKind::BudgetExceeded, "clique search exceeded " + std::to_string(budget) + " nodes");
  out.omega = static_cast<int>(search.clique.members.size());
  out.certificate = certificate_for(g, std::move(search.clique.members), std::nullopt);
  return out;
}

std::optional<std::pair<VertexId, VertexId>> find_small_degree_edge(const PlaneGraph& g, const VertexSet& in_s, int D) {
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (in_s.test(v) || g.degree(v) > 5) continue;
    std::optional<VertexId> pick;
    for (VertexId w : g.rotation(v))
      if (g.degree(v) + g.degree(w) <= D + 2 && (!pick || w < *pick)) pick = w;
    if (pick) return std::pair{v, *pick};
  }
  return std::nullopt;
}

Reduction reduce_small_degree_edges(const PlaneGraph& graph, std::span<const VertexId> S, int D) {
  if (graph.max_degree() > D)
    fail(ErrorKind::DegreeBudgetViolated,
         "maximum degree " + std::to_string(graph.max_degree()) + " exceeds D = " + std::to_string(D));
  if (!is_clique(square(graph), S)) fail(ErrorKind::NotAClique, "S is not a clique in the square");

  Reduction r{graph, {}, {}, {}};
  r.origin.resize(static_cast<std::size_t>(graph.num_vertices()));
  std::iota(r.origin.begin(), r.origin.end(), 0);
  VertexSet in_s = VertexSet::of(graph.num_vertices(), S);

  while (auto edge = find_small_degree_edge(r.graph, in_s, D)) {
    auto [v, w] = *edge;
    Relabeled step = contract_edge(r.graph, v, w);
    VertexSet next(step.graph.num_vertices());
    in_s.for_each([&](VertexId u) { next.set(step.mapping[static_cast<std::size_t>(u)]); });
    for (auto& o : r.origin) o = step.mapping[static_cast<std::size_t>(o)];
    r.log.push_back({v, w, step.merged});
    r.graph = std::move(step.graph);
    in_s = std::move(next);
  }
  r.S = in_s.to_vector();

  if (r.graph.max_degree() > D) fail(ErrorKind::InvariantViolation, "reduction raised the maximum degree above D");
  if (!is_clique(square(r.graph), r.S)) fail(ErrorKind::InvariantViolation, "reduction broke cliqueness of S");
  return r;
}

const char* to_string(CharacterizationReport::Status status) {
  switch (status) {
    case CharacterizationReport::Status::pass: return "PASS";
    case CharacterizationReport::Status::fail: return "FAIL";
    case CharacterizationReport::Status::not_applicable: return "NOT-APPLICABLE";
  }
  return "?";
}

CharacterizationReport verify_characterization(const PlaneGraph& graph, int D, std::uint64_t budget) {
  const SimpleGraph g = graph.to_simple();
  require_budget(g, D);
  const SimpleGraph h = square(g);
  auto search = max_clique_exact(h, budget);
  if (search.budget_exceeded)
    fail(ErrorKind::BudgetExceeded, "clique search exceeded " + std::to_string(budget) + " nodes");

  CharacterizationReport report;
  report.threshold = D + 20;
  report.omega = static_cast<int>(search.clique.members.size());
  if (report.omega < report.threshold) {
    report.status = CharacterizationReport::Status::not_applicable;
    report.S = std::move(search.clique.members);
    return report;
  }
  report.S = extend_to_maximal(h, search.clique.members).members;
  report.pattern = find_defining_triple(g, report.S);
  if (report.pattern) {
    report.status = CharacterizationReport::Status::pass;
    report.certificate = corollary_certificate(g, *report.pattern, D);
  } else {
    report.status = CharacterizationReport::Status::fail;
  }
  return report;
}

}  // namespace squares
