#pragma once

#include <vector>

#include "squares/plane_graph.hpp"
#include "squares/simple_graph.hpp"

namespace squares {

struct DegeneracyOrder {
  std::vector<VertexId> order;  // deletion sequence
  int k = 0;                    // largest residual degree at deletion
};

// Min-degree peeling, ties to the lowest id.
DegeneracyOrder degeneracy_order(const SimpleGraph& graph);
// Same, additionally enforcing k <= 5 (InvariantViolation otherwise).
DegeneracyOrder degeneracy_order(const PlaneGraph& graph);

struct ColoringResult {
  enum class Method { greedy_square, contraction };

  std::vector<int> color;
  int count = 0;
  Method method = Method::greedy_square;
};

const char* to_string(ColoringResult::Method method);

// True iff vertices within distance 2 of each other always differ in colour.
bool is_proper_square_coloring(const SimpleGraph& graph, const std::vector<int>& color);

// Least-available colouring of G² in reverse degeneracy order of G.
ColoringResult greedy_square_color(const PlaneGraph& graph);

/// Peels the lemma_a_witness vertex v at each level: deleted when isolated or a leaf,
/// otherwise contracted onto its lowest-degree neighbour (which has degree
/// at most 10 when d(v) >= 3). Vertices are restored in reverse, each taking
/// the least colour absent from its distance-2 ball at that level.
/// Throws WitnessNotFound.
ColoringResult contraction_color(const PlaneGraph& graph);

struct LemmaAWitness {
  VertexId v = kNoVertex;
  int lemma_case = 0;  // 1..4
  // Neighbours sorted by non-decreasing degree, with those degrees.
  std::vector<VertexId> neighbors;
  std::vector<int> degrees;
};

// Checks the inequalities of the witness's case against `graph`.
bool witness_holds(const SimpleGraph& graph, const LemmaAWitness& witness);

/// First vertex, in ascending (degree, id) order, whose degree-sorted
/// neighbourhood satisfies one of:
///   1. s <= 2;  2. s = 3, d(w1) <= 10;  3. s = 4, d(w1)+d(w2) <= 15, d(w2) <= 10;
///   4. s = 5, d(w1)+d(w2)+d(w3) <= 18, d(w3) <= 7.
/// Throws WitnessNotFound.
LemmaAWitness lemma_a_witness(const SimpleGraph& graph);
LemmaAWitness lemma_a_witness(const PlaneGraph& graph);

}  // namespace squares
