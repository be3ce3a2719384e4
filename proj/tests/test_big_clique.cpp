#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "squares/big_clique.hpp"
#include "squares/error.hpp"
#include "squares/generators.hpp"
#include "squares/square_ops.hpp"

using namespace squares;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Io;
}

std::vector<VertexId> iota_ids(int n) {
  std::vector<VertexId> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

}  // namespace

TEST_CASE("candidate set and its partition match direct membership") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = oracle::random_simple(6 + trial % 20, 0.3, rng);
    int n = g.num_vertices();
    VertexId x = rng() % n, y = rng() % n, z = rng() % n;
    if (x == y || y == z || x == z) continue;
    auto p = candidate_set(g, x, y, z);
    CHECK(p.S == oracle::brute_candidate_set(g, x, y, z));
    CHECK(p.sizes().total() == static_cast<int>(p.S.size()));
    for (VertexId v : p.W) CHECK((g.has_edge(v, x) && g.has_edge(v, y) && g.has_edge(v, z)));
    for (VertexId v : p.X) CHECK((g.has_edge(v, y) && g.has_edge(v, z) && !g.has_edge(v, x)));
    for (VertexId v : p.Y) CHECK((g.has_edge(v, x) && g.has_edge(v, z) && !g.has_edge(v, y)));
    for (VertexId v : p.Z) CHECK((g.has_edge(v, x) && g.has_edge(v, y) && !g.has_edge(v, z)));
    for (VertexId v : p.T) CHECK((v == x || v == y || v == z));
  }
  auto g = oracle::k4().to_simple();
  CHECK(kind_of([&] { candidate_set(g, 1, 1, 2); }) == ErrorKind::DuplicateVertices);
}

TEST_CASE("even extremal graph: partition and tight certificate") {
  for (int s = 10; s <= 24; ++s) {
    CAPTURE(s);
    auto w = wegner_even(s);
    auto g = w.graph.to_simple();
    auto p = candidate_set(g, w.triple.x, w.triple.y, w.triple.z);
    auto sz = p.sizes();
    CHECK(sz.T == 3);
    CHECK(sz.W == 0);
    CHECK(sz.X == s);
    CHECK(sz.Y == s - 1);
    CHECK(sz.Z == s - 1);
    auto c = corollary_certificate(g, p, 2 * s);
    CHECK(c.t_degree_sum == 4);
    CHECK(c.t_connected);
    CHECK(c.bound == 3 * s + 1);
    CHECK(c.slack == 0);
  }
  auto w = wegner_even(10);
  auto p = candidate_set(w.graph, w.triple.x, w.triple.y, w.triple.z);
  CHECK(kind_of([&] { corollary_certificate(w.graph.to_simple(), p, 19); }) == ErrorKind::DegreeBudgetViolated);
}

TEST_CASE("certificate slack is non-negative on random triples") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = random_triangulation({static_cast<std::uint64_t>(trial), 10 + trial % 40}).to_simple();
    int n = g.num_vertices();
    VertexId x = rng() % n, y = rng() % n, z = rng() % n;
    if (x == y || y == z || x == z) continue;
    auto c = corollary_certificate(g, candidate_set(g, x, y, z), g.max_degree());
    CHECK(c.slack >= 0);
    if (c.t_connected) CHECK(c.bound <= 3 * g.max_degree() / 2 + 1);
  }
}

TEST_CASE("big clique search on extremal graphs") {
  auto w = wegner_even(20);
  auto found = find_big_clique(w.graph, BigSetQuery{40});
  REQUIRE(found.has_value());
  CHECK(found->S.size() == 61);
  auto expect = w.triple.as_array();
  std::sort(expect.begin(), expect.end());
  CHECK(found->triple.as_array() == expect);
  auto unpruned = find_big_clique(w.graph, BigSetQuery{40}, false);
  REQUIRE(unpruned.has_value());
  CHECK(unpruned->triple == found->triple);

  CHECK_FALSE(find_big_clique(w.graph, BigSetQuery{42}).has_value());
  CHECK(kind_of([&] { find_big_clique(w.graph, BigSetQuery{39}); }) == ErrorKind::DegreeBudgetViolated);
  CHECK(kind_of([&] { find_big_clique(wegner_even(3).graph, BigSetQuery{18}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("defining triple") {
  auto w = wegner_odd(21);
  auto g = w.graph.to_simple();
  auto all = iota_ids(g.num_vertices());
  auto t = find_defining_triple(g, all);
  REQUIRE(t.has_value());
  CHECK(t->S == all);
  std::vector<VertexId> partial(all.begin(), all.end() - 1);
  CHECK_FALSE(find_defining_triple(g, partial).has_value());
}

TEST_CASE("structured clique number") {
  auto small = omega_square_structured(wegner_even(3).graph, 19);
  CHECK(small.omega == 10);
  CHECK_FALSE(small.pattern.has_value());
  CHECK(small.certificate.kind == CliqueCertificate::Kind::explicit_set);
  CHECK(verify_square_certificate(wegner_even(3).graph.to_simple(), small.certificate));

  auto big_graph = wegner_even(20).graph;
  auto big = omega_square_structured(big_graph, 40);
  CHECK(big.omega == 61);
  REQUIRE(big.pattern.has_value());
  CHECK(big.certificate.kind == CliqueCertificate::Kind::triple);
  CHECK(verify_square_certificate(big_graph.to_simple(), big.certificate));

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = random_triangulation({seed, 10 + static_cast<int>(seed % 8)});
    int D = std::max(19, g.max_degree());
    auto r = omega_square_structured(g, D);
    CHECK(r.omega == oracle::brute_clique(oracle::square_matrix(g.to_simple())));
  }

  auto hub = hub_triangulation({4, 70}, 30);
  CHECK(kind_of([&] { omega_square_structured(hub, std::max(19, hub.max_degree()), 1); }) ==
        ErrorKind::BudgetExceeded);
}

TEST_CASE("small-degree edge reduction restores the extremal graph") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const int s = 19 + static_cast<int>(seed % 3);
    const int pendants = 1 + static_cast<int>(seed % 6);
    auto w = wegner_perturbed(s, pendants, seed);
    auto S = iota_ids(3 * s + 1);
    auto r = reduce_small_degree_edges(w.graph, S, 2 * s);
    CHECK(r.log.size() == static_cast<std::size_t>(pendants));
    CHECK(r.graph.num_vertices() == 3 * s + 1);
    CHECK(r.S.size() == S.size());
    CHECK(r.graph.max_degree() <= 2 * s);
    CHECK_FALSE(find_small_degree_edge(r.graph, VertexSet::of(r.graph.num_vertices(), r.S), 2 * s).has_value());
    CHECK(canonical_code(r.graph) == canonical_code(wegner_even(s).graph));
    for (VertexId v = 0; v < w.graph.num_vertices(); ++v) CHECK(r.origin[v] >= 0);
  }
}

TEST_CASE("reduction rejects bad inputs") {
  auto w = wegner_perturbed(19, 2, 1);
  auto S = iota_ids(58);
  CHECK(kind_of([&] { reduce_small_degree_edges(w.graph, S, 37); }) == ErrorKind::DegreeBudgetViolated);
  auto p = oracle::path(5);
  std::vector<VertexId> far{0, 4};
  CHECK(kind_of([&] { reduce_small_degree_edges(p, far, 19); }) == ErrorKind::NotAClique);
}

TEST_CASE("characterization verdicts") {
  auto pass = verify_characterization(wegner_even(20).graph, 40);
  CHECK(pass.status == CharacterizationReport::Status::pass);
  CHECK(pass.omega == 61);
  CHECK(pass.threshold == 60);
  REQUIRE(pass.certificate.has_value());
  CHECK(pass.certificate->slack == 0);

  auto odd = verify_characterization(wegner_odd(41).graph, 41);
  CHECK(odd.status == CharacterizationReport::Status::pass);
  CHECK(odd.omega == 62);

  auto na = verify_characterization(wegner_even(3).graph, 19);
  CHECK(na.status == CharacterizationReport::Status::not_applicable);
  CHECK(na.omega == 10);

  CHECK(std::string(to_string(CharacterizationReport::Status::not_applicable)) == "NOT-APPLICABLE");
}
