#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "squares/generators.hpp"
#include "squares/simple_graph.hpp"

namespace squares {

inline constexpr std::uint64_t kDefaultCliqueBudget = 100'000'000;

// A path of length 1 or 2 in the base graph certifying that its endpoints
// are adjacent in the square.
struct SquareWitness {
  VertexId u;
  VertexId v;
  VertexId via = kNoVertex;  // kNoVertex for a direct edge
};

struct CliqueCertificate {
  enum class Kind { explicit_set, triple };

  std::vector<VertexId> members;  // sorted ascending
  Kind kind = Kind::explicit_set;
  std::optional<Triple> triple;
  std::vector<SquareWitness> witnesses;  // empty unless attached
};

struct CliqueSearch {
  CliqueCertificate clique;
  bool budget_exceeded = false;
  std::uint64_t nodes = 0;
};

/// Branch and bound over bitsets: vertices are ordered by non-increasing
/// degree, each node recolours its candidates greedily and prunes when the
/// current size plus the colour bound cannot beat the incumbent.
/// With `size_cap`, the search stops as soon as a clique of that size is found.
/// On budget exhaustion the best clique found so far is returned with the flag set.
CliqueSearch max_clique_exact(const SimpleGraph& graph, std::uint64_t budget = kDefaultCliqueBudget,
                              std::optional<int> size_cap = std::nullopt);

bool is_clique(const SimpleGraph& graph, std::span<const VertexId> members);
bool is_maximal_clique(const SimpleGraph& graph, std::span<const VertexId> members);

// Greedily adds vertices in ascending id order. Throws NotAClique.
CliqueCertificate extend_to_maximal(const SimpleGraph& graph, std::span<const VertexId> members);

// Witness paths in `base` for every pair of members. Throws NotAClique if
// some pair is at distance more than 2.
std::vector<SquareWitness> square_witnesses(const SimpleGraph& base, std::span<const VertexId> members);

// Checks that certificate.witnesses covers every member pair with a genuine
// path of length <= 2 in `base`.
bool verify_square_certificate(const SimpleGraph& base, const CliqueCertificate& certificate);

}  // namespace squares
