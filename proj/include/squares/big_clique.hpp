#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "squares/clique_core.hpp"
#include "squares/generators.hpp"
#include "squares/plane_graph.hpp"
#include "squares/simple_graph.hpp"

namespace squares {

struct PartitionSizes {
  int T = 0;
  int W = 0;
  int X = 0;
  int Y = 0;
  int Z = 0;
  int total() const { return T + W + X + Y + Z; }
};

/// The candidate set S = {v : |N[v] ∩ {x,y,z}| >= 2} of a triple with its
/// five-way split:
///   T = S ∩ {x,y,z},  W = N(x)∩N(y)∩N(z),
///   X = N(y)∩N(z) \ (T∪W),  Y = N(x)∩N(z) \ (T∪W),  Z = N(x)∩N(y) \ (T∪W).
/// All member lists are sorted.
struct TriplePattern {
  Triple triple;
  std::vector<VertexId> S;
  std::vector<VertexId> T, W, X, Y, Z;

  PartitionSizes sizes() const {
    return {static_cast<int>(T.size()), static_cast<int>(W.size()), static_cast<int>(X.size()),
            static_cast<int>(Y.size()), static_cast<int>(Z.size())};
  }
};

// Throws DuplicateVertices when x, y, z are not distinct.
TriplePattern candidate_set(const SimpleGraph& graph, VertexId x, VertexId y, VertexId z);
TriplePattern candidate_set(const PlaneGraph& graph, VertexId x, VertexId y, VertexId z);

struct CorollaryCertificate {
  int bound = 0;  // |T| + |W| + floor((3D - 3|W| - sum_T d_T) / 2)
  int slack = 0;  // bound - |S|
  int t_degree_sum = 0;
  bool t_connected = false;  // |T| >= 2 and G[T] connected
};

/// Counting certificate |S| <= bound from the three degree inequalities
/// |Y|+|Z|+|W|+d_T(x) <= d(x) (and cyclically). When |T| >= 2 and
/// G[T] connected, also checks sum_T d_T >= 2(|T|-1) and bound <= floor(3D/2)+1.
/// Throws DegreeBudgetViolated when Δ(G) > D.
CorollaryCertificate corollary_certificate(const SimpleGraph& graph, const TriplePattern& pattern, int max_degree_budget);

struct BigSetQuery {
  int D = 19;
  int threshold() const { return D + 20; }
};

inline constexpr int kMinDegreeBudget = 19;

/// Best triple whose candidate set has at least D+20 vertices and is a clique
/// in the square; ties go to the lexicographically smallest sorted triple.
/// With `prune`, only triples with d(x)+d(y)+d(z) >= D+17 are examined.
/// Throws DegreeBudgetViolated, InvalidArgument (D < 19).
std::optional<TriplePattern> find_big_clique(const SimpleGraph& graph, BigSetQuery query, bool prune = true);
std::optional<TriplePattern> find_big_clique(const PlaneGraph& graph, BigSetQuery query, bool prune = true);

// Some triple whose candidate set equals `target` exactly, if one exists.
std::optional<TriplePattern> find_defining_triple(const SimpleGraph& graph, std::span<const VertexId> target);

struct StructuredOmega {
  int omega = 0;
  CliqueCertificate certificate;
  std::optional<TriplePattern> pattern;
};

/// ω(G²) for a plane graph with Δ <= D, D >= 19: a big triple-based clique
/// when one exists, otherwise an exact search capped at D+19.
/// Throws BudgetExceeded, DegreeBudgetViolated, InvalidArgument.
StructuredOmega omega_square_structured(const PlaneGraph& graph, int max_degree_budget,
                                        std::uint64_t budget = kDefaultCliqueBudget);

struct ContractionStep {
  VertexId v;  // contracted away (ids of the graph before this step)
  VertexId w;
  VertexId merged;  // id of the merged vertex afterwards
};

struct Reduction {
  PlaneGraph graph;
  std::vector<VertexId> S;  // sorted, in ids of `graph`
  std::vector<ContractionStep> log;
  std::vector<VertexId> origin;  // origin[input id] = output id it ended up in
};

// Edge vw with v ∉ S, d(v) <= 5 and d(v)+d(w) <= D+2, if any.
std::optional<std::pair<VertexId, VertexId>> find_small_degree_edge(const PlaneGraph& graph, const VertexSet& in_s,
                                                                    int max_degree_budget);

/// Repeatedly contracts the first qualifying edge (lowest v, then lowest w)
/// until none remains; the merged vertex belongs to S iff w did.
/// Throws DegreeBudgetViolated or NotAClique when the inputs break the contract.
Reduction reduce_small_degree_edges(const PlaneGraph& graph, std::span<const VertexId> S, int max_degree_budget);

struct CharacterizationReport {
  enum class Status { pass, fail, not_applicable };

  Status status = Status::not_applicable;
  int omega = 0;
  int threshold = 0;
  std::vector<VertexId> S;  // the (extended) maximum clique of G²
  std::optional<TriplePattern> pattern;
  std::optional<CorollaryCertificate> certificate;
};

const char* to_string(CharacterizationReport::Status status);

/// Finds a maximum clique of G² exactly; when it reaches D+20, extends it to
/// a maximal clique and looks for a triple whose candidate set equals it.
/// Throws BudgetExceeded, DegreeBudgetViolated, InvalidArgument.
CharacterizationReport verify_characterization(const PlaneGraph& graph, int max_degree_budget,
                                               std::uint64_t budget = kDefaultCliqueBudget);

}  // namespace squares
