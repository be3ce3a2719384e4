#include "squares/clique_core.hpp"

#include <algorithm>
#include <numeric>

#include "squares/error.hpp"

namespace squares {

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const SimpleGraph& g, std::uint64_t budget, std::optional<int> cap)
      : budget_(budget), cap_(cap) {
    const int n = g.num_vertices();
    order_.resize(static_cast<std::size_t>(n));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
    std::vector<VertexId> rank(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rank[static_cast<std::size_t>(order_[static_cast<std::size_t>(i)])] = i;
    adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
    for (VertexId v = 0; v < n; ++v)
      for (VertexId u : g.neighbors(v))
        adj_[static_cast<std::size_t>(rank[static_cast<std::size_t>(v)])].set(rank[static_cast<std::size_t>(u)]);
    universe_ = n;
  }

  CliqueSearch run() {
    VertexSet all(universe_);
    for (VertexId v = 0; v < universe_; ++v) all.set(v);
    if (universe_ > 0 && !(cap_ && *cap_ <= 0)) expand(all);

    CliqueSearch out;
    for (VertexId r : best_) out.clique.members.push_back(order_[static_cast<std::size_t>(r)]);
    std::sort(out.clique.members.begin(), out.clique.members.end());
    out.budget_exceeded = exceeded_;
    out.nodes = nodes_;
    return out;
  }

 private:
  void expand(VertexSet candidates) {
    if (++nodes_ > budget_) {
      exceeded_ = stop_ = true;
      return;
    }
    // Greedy colouring: colour classes are independent sets taken in rank order.
    std::vector<VertexId> order;
    std::vector<int> bound;
    VertexSet uncoloured = candidates;
    int colour = 0;
    while (uncoloured.any()) {
      ++colour;
      VertexSet available = uncoloured;
      for (VertexId v = available.first(); v >= 0; v = available.first()) {
        available.reset(v);
        available -= adj_[static_cast<std::size_t>(v)];
        uncoloured.reset(v);
        order.push_back(v);
        bound.push_back(colour);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (static_cast<int>(current_.size()) + bound[i] <= static_cast<int>(best_.size())) return;
      VertexId v = order[i];
      current_.push_back(v);
      VertexSet next = candidates & adj_[static_cast<std::size_t>(v)];
      if (next.none()) {
        if (current_.size() > best_.size()) {
          best_ = current_;
          if (cap_ && static_cast<int>(best_.size()) >= *cap_) stop_ = true;
        }
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      candidates.reset(v);
      if (stop_) return;
    }
  }

  std::uint64_t budget_;
  std::optional<int> cap_;
  int universe_ = 0;
  std::vector<VertexId> order_;  // rank -> original id
  std::vector<VertexSet> adj_;   // in rank space
  std::vector<VertexId> current_;
  std::vector<VertexId> best_;
  std::uint64_t nodes_ = 0;
  bool exceeded_ = false;
  bool stop_ = false;
};

}  // namespace

CliqueSearch max_clique_exact(const SimpleGraph& graph, std::uint64_t budget, std::optional<int> size_cap) {
  return BranchAndBound(graph, budget, size_cap).run();
}

bool is_clique(const SimpleGraph& graph, std::span<const VertexId> members) {
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (members[i] == members[j] || !graph.has_edge(members[i], members[j])) return false;
  return true;
}

bool is_maximal_clique(const SimpleGraph& graph, std::span<const VertexId> members) {
  if (!is_clique(graph, members)) return false;
  VertexSet in = VertexSet::of(graph.num_vertices(), members);
  for (VertexId v = 0; v < graph.num_vertices(); ++v) {
    if (in.test(v)) continue;
    bool all = std::all_of(members.begin(), members.end(), [&](VertexId u) { return graph.has_edge(u, v); });
    if (all) return false;
  }
  return true;
}

CliqueCertificate extend_to_maximal(const SimpleGraph& graph, std::span<const VertexId> members) {
  if (!is_clique(graph, members)) fail(ErrorKind::NotAClique, "input set is not a clique");
  CliqueCertificate out;
  out.members.assign(members.begin(), members.end());
  VertexSet common(graph.num_vertices());
  for (VertexId v = 0; v < graph.num_vertices(); ++v) common.set(v);
  for (VertexId u : members) common &= graph.closed_neighborhood(u);
  for (VertexId u : members) common.reset(u);
  for (VertexId v = common.first(); v >= 0; v = common.first()) {
    out.members.push_back(v);
    common &= graph.closed_neighborhood(v);
    common.reset(v);
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

std::vector<SquareWitness> square_witnesses(const SimpleGraph& base, std::span<const VertexId> members) {
  std::vector<SquareWitness> out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      VertexId u = members[i];
      VertexId v = members[j];
      if (base.has_edge(u, v)) {
        out.push_back({u, v, kNoVertex});
        continue;
      }
      auto nu = base.neighbors(u);
      auto nv = base.neighbors(v);
      std::vector<VertexId> common;
      std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(common));
      if (common.empty())
        fail(ErrorKind::NotAClique, std::to_string(u) + " and " + std::to_string(v) + " are at distance > 2");
      out.push_back({u, v, common.front()});
    }
  }
  return out;
}

bool verify_square_certificate(const SimpleGraph& base, const CliqueCertificate& certificate) {
  const auto& m = certificate.members;
  std::vector<std::pair<VertexId, VertexId>> covered;
  for (const auto& w : certificate.witnesses) {
    bool ok = w.via == kNoVertex ? base.has_edge(w.u, w.v) : base.has_edge(w.u, w.via) && base.has_edge(w.via, w.v);
    if (!ok || w.u == w.v) return false;
    covered.emplace_back(std::min(w.u, w.v), std::max(w.u, w.v));
  }
  std::sort(covered.begin(), covered.end());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!std::binary_search(covered.begin(), covered.end(),
                              std::pair{std::min(m[i], m[j]), std::max(m[i], m[j])}))
        return false;
  return true;
}

}  // namespace squares
