// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "squares/big_clique.hpp"
#include "squares/clique_core.hpp"
#include "squares/error.hpp"
#include "squares/generators.hpp"
#include "squares/plane_graph.hpp"
#include "squares/square_ops.hpp"
#include "squares/structure_checks.hpp"

using namespace squares;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  int checked = 0;

  // Records the first few failures; returns cond.
  bool expect(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) note << what;
      ok = false;
    }
    return cond;
  }
};

int exact_omega(const SimpleGraph& g) {
  auto r = max_clique_exact(square(g));
  if (r.budget_exceeded) fail(ErrorKind::BudgetExceeded, "oracle search exhausted its budget");
  return static_cast<int>(r.clique.members.size());
}

bool square_complete(const SimpleGraph& g) { return square(g).num_edges() == g.num_vertices() * (g.num_vertices() - 1) / 2; }

// ω(G²) >= Δ+1 gets checked on everything the other criteria touch.
struct LowerBoundLog {
  int instances = 0;
  int violations = 0;
  void record(int omega, int delta) {
    ++instances;
    if (omega < delta + 1) ++violations;
  }
} lower_bound_log;

void extremal_even(Outcome& o) {
  for (int s = 1; s <= 25; ++s) {
    auto w = wegner_even(s);
    auto g = w.graph.to_simple();
    const std::string tag = "s=" + std::to_string(s) + ": ";
    o.expect(g.num_vertices() == 3 * s + 1, tag + "order");
    o.expect(g.max_degree() == 2 * s, tag + "max degree");
    o.expect(oracle::diameter(g) == 2, tag + "diameter");
    o.expect(square_complete(g), tag + "square not complete");
    const int D = std::max(kMinDegreeBudget, 2 * s);
    int omega = omega_square_structured(w.graph, D).omega;
    o.expect(omega == 3 * s + 1 && omega == 3 * g.max_degree() / 2 + 1, tag + "omega " + std::to_string(omega));
    lower_bound_log.record(omega, g.max_degree());
    ++o.checked;
  }
}

void extremal_odd(Outcome& o) {
  for (int D = 5; D <= 41; D += 2) {
    auto g = wegner_odd(D).graph.to_simple();
    const std::string tag = "D=" + std::to_string(D) + ": ";
    const int target = 3 * D / 2 + 1;
    o.expect(g.max_degree() == D, tag + "max degree");
    o.expect(g.num_vertices() == target, tag + "order");
    o.expect(square_complete(g), tag + "square not complete");
    if (D <= 21) {
      int omega = exact_omega(g);
      o.expect(omega == target, tag + "oracle omega " + std::to_string(omega));
      lower_bound_log.record(omega, D);
    }
    ++o.checked;
  }
}

void characterization(Outcome& o) {
  auto check = [&](const PlaneGraph& g, int s, const std::string& tag) {
    const int D = 2 * s;
    auto r = verify_characterization(g, D);
    o.expect(r.status == CharacterizationReport::Status::pass, tag + to_string(r.status));
    o.expect(r.omega >= D + 20, tag + "omega below threshold");
    o.expect(is_maximal_clique(square(g), r.S), tag + "clique not maximal");
    if (r.pattern) {
      auto again = candidate_set(g, r.pattern->triple.x, r.pattern->triple.y, r.pattern->triple.z);
      o.expect(again.S == r.S, tag + "candidate set differs from clique");
    }
    lower_bound_log.record(r.omega, g.max_degree());
    ++o.checked;
  };
  for (int s = 19; s <= 22; ++s) check(wegner_even(s).graph, s, "wegner s=" + std::to_string(s) + ": ");
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int s = 19 + static_cast<int>(seed % 4);
    const int p = static_cast<int>(seed % 9);
    check(wegner_perturbed(s, p, seed).graph, s, "perturbed seed=" + std::to_string(seed) + ": ");
  }
}

// High-degree plane instances on at most 120 vertices.
PlaneGraph high_degree_instance(std::uint64_t i) {
  std::mt19937_64 rng(i * 0x51ed27ULL + 1);
  switch (i % 6) {
    case 0: return wegner_even(18 + static_cast<int>(rng() % 22)).graph;
    case 1: return wegner_odd(37 + 2 * static_cast<int>(rng() % 22)).graph;
    case 2: {
      int s = 18 + static_cast<int>(rng() % 20);
      int room = 120 - (3 * s + 1);
      return wegner_perturbed(s, static_cast<int>(rng() % (std::min(room, 15) + 1)), rng()).graph;
    }
    case 3: return diagonalize(wegner_even(18 + static_cast<int>(rng() % 22)).graph);
    case 4: return diagonalize(sparsify(wegner_odd(37 + 2 * static_cast<int>(rng() % 20)).graph, 0.9, rng()));
    default: {
      int n = 70 + static_cast<int>(rng() % 51);
      return hub_triangulation({rng(), n}, 36 + static_cast<int>(rng() % 30));
    }
  }
}

void clique_bound(Outcome& o) {
  std::mt19937_64 rng(404);
  int tight = 0;
  for (std::uint64_t i = 0; o.checked < 500; ++i) {
    PlaneGraph pg = high_degree_instance(i);
    auto g = pg.to_simple();
    const int delta = g.max_degree();
    if (delta < 36 || g.num_vertices() > 120) continue;
    const std::string tag = "instance " + std::to_string(i) + ": ";
    int omega = exact_omega(g);
    o.expect(omega <= 3 * delta / 2 + 1, tag + "omega " + std::to_string(omega) + " above bound");
    tight += omega == 3 * delta / 2 + 1;
    lower_bound_log.record(omega, delta);

    std::vector<TriplePattern> patterns;
    if (auto big = find_big_clique(g, BigSetQuery{delta})) patterns.push_back(*big);
    std::vector<VertexId> by_degree(static_cast<std::size_t>(g.num_vertices()));
    for (VertexId v = 0; v < g.num_vertices(); ++v) by_degree[static_cast<std::size_t>(v)] = v;
    std::sort(by_degree.begin(), by_degree.end(), [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
    const int top = std::min<int>(8, g.num_vertices());
    for (int a = 0; a < top; ++a)
      for (int b = a + 1; b < top; ++b)
        for (int c = b + 1; c < top; ++c)
          patterns.push_back(candidate_set(g, by_degree[a], by_degree[b], by_degree[c]));
    for (int k = 0; k < 20; ++k) {
      VertexId x = rng() % g.num_vertices(), y = rng() % g.num_vertices(), z = rng() % g.num_vertices();
      if (x != y && y != z && x != z) patterns.push_back(candidate_set(g, x, y, z));
    }
    for (const auto& p : patterns) {
      auto c = corollary_certificate(g, p, delta);
      if (c.t_connected) o.expect(c.slack >= 0, tag + "negative slack");
    }
    ++o.checked;
  }
  o.note << (o.ok ? "" : "; ") << tight << " tight";
}

void lower_bound(Outcome& o) {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    int n = 6 + static_cast<int>(seed % 60);
    PlaneGraph g = seed % 3 == 0   ? random_triangulation({seed, n})
                   : seed % 3 == 1 ? sparsify(random_triangulation({seed, n}), 0.55, seed)
                                   : hub_triangulation({seed, n + 20}, 15 + static_cast<int>(seed % 20));
    auto simple = g.to_simple();
    lower_bound_log.record(exact_omega(simple), simple.max_degree());
  }
  o.checked = lower_bound_log.instances;
  o.expect(lower_bound_log.violations == 0, std::to_string(lower_bound_log.violations) + " violations");
}

PlaneGraph planar_instance(std::uint64_t seed, int max_n) {
  std::mt19937_64 rng(seed * 7919 + 3);
  int n = 4 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - 3));
  switch (seed % 5) {
    case 0: return random_triangulation({rng(), n});
    case 1: return sparsify(random_triangulation({rng(), n}), 0.35 + 0.5 * std::uniform_real_distribution<>(0, 1)(rng), rng());
    case 2: return diagonalize(sparsify(random_triangulation({rng(), n}), 0.5, rng()));
    case 3: return hub_triangulation({rng(), std::max(n, 20)}, 13 + static_cast<int>(rng() % 40));
    default: return wegner_perturbed(2 + static_cast<int>(rng() % 30), static_cast<int>(rng() % 9), rng()).graph;
  }
}

void degeneracy_and_coloring(Outcome& o) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    PlaneGraph g = planar_instance(seed, 120);
    auto simple = g.to_simple();
    const int delta = g.max_degree();
    const std::string tag = "seed " + std::to_string(seed) + ": ";
    o.expect(degeneracy_order(simple).k <= 5, tag + "degeneracy");
    auto greedy = greedy_square_color(g);
    o.expect(is_proper_square_coloring(simple, greedy.color), tag + "greedy not proper");
    o.expect(greedy.count <= 9 * delta + 1, tag + "greedy count");
    auto contracted = contraction_color(g);
    o.expect(is_proper_square_coloring(simple, contracted.color), tag + "contraction not proper");
    if (delta >= 13) o.expect(contracted.count <= 2 * delta + 19, tag + "contraction count");
    ++o.checked;
  }
}

void lemma_a(Outcome& o) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    PlaneGraph g = planar_instance(seed + 100000, 200);
    if (seed % 4 == 0) g = diagonalize(g);
    auto w = lemma_a_witness(g);
    o.expect(witness_holds(g.to_simple(), w), "seed " + std::to_string(seed) + ": witness invalid");
    ++o.checked;
  }
}

void remark1(Outcome& o) {
  std::mt19937_64 rng(1001);
  int nonempty = 0;
  for (std::uint64_t attempt = 0; o.checked < 1000 && attempt < 200000; ++attempt) {
    auto g = random_triangulation({attempt, 8 + static_cast<int>(rng() % 70)});
    auto simple = g.to_simple();
    VertexId a = rng() % g.num_vertices();
    std::vector<VertexId> a_side;
    auto c1 = oracle::random_link_cycle(g, a, rng() % 3 == 0 ? 0 : static_cast<int>(rng() % 4), rng, &a_side);
    if (c1.empty()) continue;
    auto on = [](const std::vector<VertexId>& c, VertexId v) { return std::find(c.begin(), c.end(), v) != c.end(); };
    std::vector<VertexId> outside;
    for (VertexId v = 0; v < g.num_vertices(); ++v)
      if (!on(c1, v) && !on(a_side, v)) outside.push_back(v);
    if (outside.empty()) continue;
    VertexId b = outside[rng() % outside.size()];
    std::vector<VertexId> c2;
    if (rng() & 1) {
      c2 = oracle::random_link_cycle(g, b, rng() % 2 == 0 ? 0 : static_cast<int>(rng() % 4), rng);
    } else {
      c2 = oracle::random_link_cycle(g, a, static_cast<int>(rng() % 4), rng);
    }
    if (c2.empty() || on(c2, a) || on(c2, b)) continue;
    if (!oracle::separated(simple, c1, a, b) || !oracle::separated(simple, c2, a, b)) continue;

    auto got = remark1_common_neighbor(g, CycleSpec{c1}, CycleSpec{c2}, a, b);
    const int dist = oracle::bfs(simple, a)[b];
    const std::string tag = "attempt " + std::to_string(attempt) + ": ";
    o.expect(got.has_value() == (dist >= 0 && dist <= 2), tag + "presence disagrees with distance");
    if (got) {
      o.expect(simple.has_edge(*got, a) && simple.has_edge(*got, b), tag + "not a common neighbour");
      o.expect(on(c1, *got) && on(c2, *got), tag + "not on both cycles");
      ++nonempty;
    }
    ++o.checked;
  }
  o.expect(o.checked == 1000, "only " + std::to_string(o.checked) + " instances generated");
  o.note << (o.ok ? "" : "; ") << nonempty << " with a common neighbour";
}

void reduction(Outcome& o) {
  auto qualifying_edge_left = [](const PlaneGraph& g, const std::vector<VertexId>& S, int D) {
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (std::binary_search(S.begin(), S.end(), v) || g.degree(v) > 5) continue;
      for (VertexId w : g.rotation(v))
        if (g.degree(v) + g.degree(w) <= D + 2) return true;
    }
    return false;
  };
  auto is_square_clique = [](const PlaneGraph& g, const std::vector<VertexId>& S) {
    auto sq = oracle::square_matrix(g.to_simple());
    for (VertexId u : S)
      for (VertexId v : S)
        if (u != v && !sq[u][v]) return false;
    return true;
  };
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const int s = 19 + static_cast<int>(seed % 6);
    const int pendants = 1 + static_cast<int>(seed % 8);
    auto w = wegner_perturbed(s, pendants, seed);
    std::vector<VertexId> S(static_cast<std::size_t>(3 * s + 1));
    for (int i = 0; i <= 3 * s; ++i) S[static_cast<std::size_t>(i)] = i;
    const int D = 2 * s;
    auto r = reduce_small_degree_edges(w.graph, S, D);
    const std::string tag = "seed " + std::to_string(seed) + ": ";
    o.expect(r.graph.num_vertices() == 3 * s + 1, tag + "pendants remain");
    o.expect(static_cast<int>(r.log.size()) == pendants, tag + "unexpected contraction count");
    o.expect(r.graph.max_degree() <= D, tag + "max degree above D");
    o.expect(r.S.size() == S.size() && is_square_clique(r.graph, r.S), tag + "S not a clique");
    o.expect(!qualifying_edge_left(r.graph, r.S, D), tag + "qualifying edge left");
    o.expect(canonical_code(r.graph) == canonical_code(wegner_even(s).graph), tag + "not the extremal graph");
    ++o.checked;
  }
  // General plane graphs with S a closed neighbourhood.
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    auto g = sparsify(random_triangulation({seed, 20 + static_cast<int>(seed % 60)}), 0.7, seed);
    VertexId hub = 0;
    for (VertexId v = 1; v < g.num_vertices(); ++v)
      if (g.degree(v) > g.degree(hub)) hub = v;
    auto nbrs = g.rotation(hub);
    std::vector<VertexId> S(nbrs.begin(), nbrs.end());
    S.push_back(hub);
    std::sort(S.begin(), S.end());
    const int D = g.max_degree();
    auto r = reduce_small_degree_edges(g, S, D);
    const std::string tag = "general seed " + std::to_string(seed) + ": ";
    o.expect(r.graph.max_degree() <= D, tag + "max degree above D");
    o.expect(r.S.size() == S.size() && is_square_clique(r.graph, r.S), tag + "S not a clique");
    o.expect(!qualifying_edge_left(r.graph, r.S, D), tag + "qualifying edge left");
    ++o.checked;
  }
}

void oracle_consistency(Outcome& o) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 12);
    double p = std::uniform_real_distribution<>(0.05, 0.95)(rng);
    auto g = oracle::random_simple(n, p, rng);
    auto r = max_clique_exact(g);
    int brute = oracle::brute_clique(oracle::adjacency_matrix(g));
    o.expect(!r.budget_exceeded && is_clique(g, r.clique.members) &&
                 static_cast<int>(r.clique.members.size()) == brute,
             "trial " + std::to_string(trial));
    ++o.checked;
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Outcome&)> run;
  };
  const Criterion criteria[] = {
      {"extremal reproduction, even maximum degree", extremal_even},
      {"extremal reproduction, odd maximum degree", extremal_odd},
      {"characterization of big cliques", characterization},
      {"clique bound and certificate slack", clique_bound},
      {"lower bound omega >= max degree + 1", lower_bound},
      {"degeneracy and square colouring", degeneracy_and_coloring},
      {"structural witness", lemma_a},
      {"common neighbour on separating cycles", remark1},
      {"small-degree edge reduction", reduction},
      {"exact clique oracle self-consistency", oracle_consistency},
  };
  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.note << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.ok;
    std::printf("%s  %2d  %-45s  n=%-5d %8.2fs  %s\n", o.ok ? "PASS" : "FAIL", index, c.name, o.checked, secs,
                o.note.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
