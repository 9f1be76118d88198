#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gdiff/graph.hpp"

namespace gdiff {

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t limit)
      : std::runtime_error("search budget of " + std::to_string(limit) + " nodes exceeded"), limit_(limit) {}
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Node counter shared by one search. Exhaustion throws; there is no partial
/// answer.
class SearchBudget {
 public:
  explicit SearchBudget(std::uint64_t limit = kDefaultBudget) : limit_(limit) {}

  void charge(std::uint64_t nodes = 1) {
    used_ += nodes;
    if (used_ > limit_) throw BudgetExceeded(limit_);
  }
  /// Throws up front when `nodes` more would not fit.
  void reserve(std::uint64_t nodes) const {
    if (nodes > limit_ - std::min(used_, limit_)) throw BudgetExceeded(limit_);
  }

  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

namespace detail {

template <class Visit>
void k_subsets_from(std::span<const VertexSet> adj, const std::vector<Vertex>& pool, std::size_t start, int remaining,
                    VertexSet chosen, VertexSet reach, SearchBudget& budget, Visit& visit) {
  budget.charge();
  if (remaining == 0) {
    visit(chosen, reach);
    return;
  }
  for (std::size_t i = start; i + remaining <= pool.size(); ++i) {
    const Vertex v = pool[i];
    k_subsets_from(adj, pool, i + 1, remaining - 1, chosen.with(v), reach | adj[v], budget, visit);
  }
}

}  // namespace detail

/// Calls visit(S, N(S)) for every k-subset S of `pool`, in lexicographic order
/// of the sorted member sequence. N(S) is the open neighbourhood in `g`.
template <class Visit>
void for_each_k_subset(const Graph& g, VertexSet pool, int k, SearchBudget& budget, Visit&& visit) {
  g.check_subset(pool);
  if (k < 0 || k > pool.size()) return;
  const std::vector<Vertex> members = pool.to_vector();
  detail::k_subsets_from(g.adjacency(), members, 0, k, VertexSet{}, VertexSet{}, budget, visit);
}

/// Calls visit(S, N(S)) for every subset of `pool`, cardinality ascending.
template <class Visit>
void for_each_subset(const Graph& g, VertexSet pool, SearchBudget& budget, Visit&& visit) {
  for (int k = 0; k <= pool.size(); ++k) for_each_k_subset(g, pool, k, budget, visit);
}

}  // namespace gdiff
