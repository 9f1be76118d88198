#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gdiff/graph.hpp"
#include "gdiff/r_graph.hpp"
#include "gdiff/search.hpp"

namespace gdiff {

// ---------------------------------------------------------------------------
// Differential
// ---------------------------------------------------------------------------

struct DifferentialOptions {
  bool enumerate = false;  // collect every maximizer, plus min/max cardinality
  std::uint64_t budget = kDefaultBudget;
};

struct DifferentialResult {
  int value = 0;
  VertexSet witness;                // shortlex-smallest maximizer, i.e. a minimum differential set
  std::vector<VertexSet> all_sets;  // every maximizer in shortlex order; only filled when enumerating
  std::optional<int> min_card;      // only when enumerating
  std::optional<int> max_card;
  std::uint64_t search_space_size = 0;  // subset-tree nodes visited
};

/// ∂(G) = max over S of |B(S)| - |S|, optionally with S restricted to a pool.
///
/// Subsets are scanned by cardinality k ascending. A k-set has at most
/// order - k outside vertices, so ∂(S) <= order - 2k, and the scan stops at
/// the first k whose bound cannot beat (or, when enumerating, tie) the best.
inline DifferentialResult differential_exact(const Graph& g, std::optional<VertexSet> restrict_to = std::nullopt,
                                             const DifferentialOptions& opts = {}) {
  if (g.order() == 0) throw std::invalid_argument("differential of the graph on zero vertices is undefined");
  const VertexSet pool = restrict_to.value_or(g.vertices());
  g.check_subset(pool);

  SearchBudget budget(opts.budget);
  DifferentialResult res;
  res.value = 0;  // S = ∅
  res.witness = VertexSet{};
  if (opts.enumerate) res.all_sets.push_back(VertexSet{});

  const int order = g.order();
  for (int k = 1; k <= pool.size(); ++k) {
    const int bound = order - 2 * k;
    if (opts.enumerate ? bound < res.value : bound <= res.value) break;
    for_each_k_subset(g, pool, k, budget, [&](VertexSet s, VertexSet reach) {
      const int d = (reach - s).size() - k;
      if (d > res.value) {
        res.value = d;
        res.witness = s;
        if (opts.enumerate) res.all_sets.assign(1, s);
      } else if (d == res.value && opts.enumerate) {
        res.all_sets.push_back(s);
      }
    });
  }
  res.search_space_size = budget.used();
  if (opts.enumerate) {
    res.min_card = res.all_sets.front().size();
    res.max_card = res.all_sets.back().size();
  }
  return res;
}

enum class RSearchMode { full, v_restricted };

/// ∂(R(G)). The V-restricted mode scans only subsets of the original vertices
/// (2^n instead of 2^(n+m)); every differential set of R(G) has an
/// equal-size counterpart inside V when G is connected of order >= 3.
inline DifferentialResult differential_of_r(const RGraph& rg, RSearchMode mode = RSearchMode::v_restricted,
                                            const DifferentialOptions& opts = {}) {
  if (mode == RSearchMode::full) return differential_exact(rg.total, std::nullopt, opts);
  if (rg.base.order() < 3) throw std::invalid_argument("V-restricted search needs a base graph of order >= 3");
  if (!is_connected(rg.base)) throw std::invalid_argument("V-restricted search needs a connected base graph");
  return differential_exact(rg.total, rg.v_part, opts);
}

// ---------------------------------------------------------------------------
// Literal membership checks
// ---------------------------------------------------------------------------

inline bool is_dominating(const Graph& g, VertexSet s) { return set_neighborhood(g, s, true) == g.vertices(); }

inline bool is_vertex_cover(const Graph& g, VertexSet s) {
  g.check_subset(s);
  for (Vertex v : g.vertices() - s) {
    if (!g.adjacency()[v].is_subset_of(s)) return false;
  }
  return true;
}

inline bool is_independent(const Graph& g, VertexSet s) {
  g.check_subset(s);
  return std::none_of(s.begin(), s.end(), [&](Vertex v) { return g.adjacency()[v].intersects(s); });
}

// ---------------------------------------------------------------------------
// Domination, vertex cover, independence
// ---------------------------------------------------------------------------

struct DominationResult {
  int gamma = 0;
  VertexSet witness;
  std::vector<VertexSet> all_min;  // every minimum dominating set, shortlex order; only when requested
};

namespace detail {

inline void dominate_from(std::span<const VertexSet> adj, VertexSet undominated, VertexSet chosen, int picks_left,
                          int max_reach, SearchBudget& budget, std::vector<VertexSet>& found) {
  budget.charge();
  if (undominated.empty()) {
    found.push_back(chosen);
    return;
  }
  if (picks_left == 0 || undominated.size() > picks_left * max_reach) return;
  // Some member of N[v] must be chosen for the lowest undominated v.
  const Vertex v = undominated.front();
  for (Vertex w : adj[v].with(v)) {
    if (chosen.contains(w)) continue;
    dominate_from(adj, undominated - adj[w].with(w), chosen.with(w), picks_left - 1, max_reach, budget, found);
  }
}

inline void sort_unique(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

}  // namespace detail

/// γ(G) with closed neighbourhoods, so isolated vertices must be chosen.
/// Iterative deepening over the size; at each depth the lowest undominated
/// vertex is branched on over its closed neighbourhood.
inline DominationResult domination_number(const Graph& g, bool enumerate_min = false,
                                          std::uint64_t budget_nodes = kDefaultBudget) {
  if (g.order() == 0) throw std::invalid_argument("domination number of the graph on zero vertices is undefined");
  SearchBudget budget(budget_nodes);
  const int max_reach = degree_stats(g).max.value_or(0) + 1;
  for (int k = 0; k <= g.order(); ++k) {
    std::vector<VertexSet> found;
    detail::dominate_from(g.adjacency(), g.vertices(), VertexSet{}, k, max_reach, budget, found);
    if (found.empty()) continue;
    detail::sort_unique(found);
    DominationResult res;
    res.gamma = k;
    res.witness = found.front();
    if (enumerate_min) res.all_min = std::move(found);
    return res;
  }
  throw std::logic_error("unreachable: V(G) dominates G");
}

struct SetResult {
  int value = 0;
  VertexSet witness;
};

namespace detail {

inline void cover_from(const Graph& g, VertexSet chosen, int picks_left, SearchBudget& budget,
                       std::vector<VertexSet>& found) {
  budget.charge();
  // Lowest edge with no end in `chosen`.
  for (Vertex a : g.vertices() - chosen) {
    const VertexSet open = g.adjacency()[a] - chosen;
    if (open.empty()) continue;
    if (picks_left == 0) return;
    const Vertex b = open.front();
    cover_from(g, chosen.with(a), picks_left - 1, budget, found);
    cover_from(g, chosen.with(b), picks_left - 1, budget, found);
    return;
  }
  found.push_back(chosen);
}

inline void independent_from(std::span<const VertexSet> adj, VertexSet chosen, VertexSet candidates,
                             SearchBudget& budget, VertexSet& best) {
  budget.charge();
  if (chosen.size() + candidates.size() < best.size()) return;
  if (candidates.empty()) {
    if (chosen.size() > best.size()) best = chosen;
    return;
  }
  const Vertex v = candidates.front();
  // Include-first in increasing vertex order visits sets lexicographically,
  // so the first maximum found is the lexicographically smallest one.
  independent_from(adj, chosen.with(v), candidates.without(v) - adj[v], budget, best);
  independent_from(adj, chosen, candidates.without(v), budget, best);
}

}  // namespace detail

/// τ(G): branch on the lowest uncovered edge, either end joins the cover.
inline SetResult vertex_cover_number(const Graph& g, std::uint64_t budget_nodes = kDefaultBudget) {
  SearchBudget budget(budget_nodes);
  for (int k = 0; k <= g.order(); ++k) {
    std::vector<VertexSet> found;
    detail::cover_from(g, VertexSet{}, k, budget, found);
    if (found.empty()) continue;
    detail::sort_unique(found);
    return {k, found.front()};
  }
  throw std::logic_error("unreachable: V(G) covers every edge");
}

/// α(G) by include/exclude branching with the trivial |chosen|+|candidates| bound.
inline SetResult independence_number(const Graph& g, std::uint64_t budget_nodes = kDefaultBudget) {
  SearchBudget budget(budget_nodes);
  VertexSet best;
  detail::independent_from(g.adjacency(), VertexSet{}, g.vertices(), budget, best);
  return {best.size(), best};
}

// ---------------------------------------------------------------------------
// Roman domination and enclaveless number
// ---------------------------------------------------------------------------

struct RomanResult {
  int weight = 0;
  std::vector<int> labels;  // labels[v] in {0, 1, 2}
};

inline bool is_roman_dominating(const Graph& g, const std::vector<int>& labels) {
  if (static_cast<int>(labels.size()) != g.order()) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (labels[v] < 0 || labels[v] > 2) return false;
    if (labels[v] != 0) continue;
    const VertexSet nv = g.adjacency()[v];
    if (std::none_of(nv.begin(), nv.end(), [&](Vertex w) { return labels[w] == 2; })) return false;
  }
  return true;
}

/// γ_R(G) by scanning all 3^n labelings. Deliberately does not go through the
/// differential solver, so that ∂(G) + γ_R(G) = n can be cross-checked.
inline RomanResult roman_domination_number(const Graph& g, std::uint64_t budget_nodes = kDefaultBudget) {
  const int n = g.order();
  if (n == 0) throw std::invalid_argument("Roman domination of the graph on zero vertices is undefined");
  SearchBudget budget(budget_nodes);
  std::uint64_t labelings = 1;
  for (int i = 0; i < n; ++i) {
    labelings *= 3;
    budget.reserve(labelings);
  }

  std::vector<int> labels(n, 0);
  VertexSet ones;
  VertexSet twos;
  RomanResult best{2 * n + 1, {}};
  int weight = 0;
  const auto adj = g.adjacency();
  const VertexSet all = g.vertices();
  while (true) {
    budget.charge();
    if (weight < best.weight) {
      VertexSet reach;
      for (Vertex v : twos) reach |= adj[v];
      if ((all - ones - twos).is_subset_of(reach)) best = {weight, labels};
    }
    // base-3 increment, least significant digit = vertex 0
    int i = 0;
    while (i < n && labels[i] == 2) {
      labels[i] = 0;
      twos.erase(i);
      weight -= 2;
      ++i;
    }
    if (i == n) break;
    if (labels[i] == 0) {
      labels[i] = 1;
      ones.insert(i);
      weight += 1;
    } else {
      labels[i] = 2;
      ones.erase(i);
      twos.insert(i);
      weight += 1;
    }
  }
  return best;
}

/// ψ(G) = max |B(S)|. A k-set has at most n - k outside vertices, which bounds
/// the cardinality-ascending scan.
inline SetResult enclaveless_number(const Graph& g, std::uint64_t budget_nodes = kDefaultBudget) {
  SearchBudget budget(budget_nodes);
  SetResult best{0, VertexSet{}};
  for (int k = 1; k <= g.order() && g.order() - k > best.value; ++k) {
    for_each_k_subset(g, g.vertices(), k, budget, [&](VertexSet s, VertexSet reach) {
      const int b = (reach - s).size();
      if (b > best.value) best = {b, s};
    });
  }
  return best;
}

// ---------------------------------------------------------------------------
// λ(G) and μ(G)
// ---------------------------------------------------------------------------

/// λ(G) = |E(G)| - |V(G)| + 2α(G)
inline int lambda_invariant(const Graph& g, std::uint64_t budget_nodes = kDefaultBudget) {
  return g.size() - g.order() + 2 * independence_number(g, budget_nodes).value;
}

/// μ(G): the largest cardinality of a differential set of R(G) inside V.
/// The witness is the lexicographically smallest one of that size.
inline SetResult mu_invariant(const Graph& g, std::uint64_t budget_nodes = kDefaultBudget) {
  const RGraph rg = build_r(g);
  const DifferentialResult dr = differential_of_r(rg, RSearchMode::v_restricted, {true, budget_nodes});
  const int mu = *dr.max_card;
  auto it = std::find_if(dr.all_sets.begin(), dr.all_sets.end(), [&](VertexSet s) { return s.size() == mu; });
  return {mu, *it};
}

// ---------------------------------------------------------------------------
// Aggregate record
// ---------------------------------------------------------------------------

/// One invariant: either a value or the reason it was not computed.
struct Field {
  std::optional<long long> value;
  std::string skipped;

  static Field of(long long v) { return {v, {}}; }
  static Field skip(std::string why) { return {std::nullopt, std::move(why)}; }
  bool operator==(const Field&) const = default;
};

struct InvariantRecord {
  int n = 0;
  int m = 0;
  Field diff;       // ∂(G)
  Field diff_r;     // ∂(R(G))
  Field gamma;      // γ(G)
  Field gamma_r;    // γ(R(G))
  Field tau;        // τ(G)
  Field alpha;      // α(G)
  Field roman;      // γ_R(G)
  Field psi;        // ψ(G)
  Field lambda;     // λ(G)
  Field mu;         // μ(G)
  Field delta_min;  // δ(G)
  Field delta_max;  // Δ(G)

  std::vector<std::pair<std::string, const Field*>> fields() const {
    return {{"diff", &diff},   {"diff_r", &diff_r}, {"gamma", &gamma},   {"gamma_r", &gamma_r},
            {"tau", &tau},     {"alpha", &alpha},   {"roman", &roman},   {"psi", &psi},
            {"lambda", &lambda}, {"mu", &mu},       {"delta_min", &delta_min}, {"delta_max", &delta_max}};
  }
};

namespace detail {

template <class F>
Field guarded(F&& compute) {
  try {
    return Field::of(compute());
  } catch (const BudgetExceeded& e) {
    return Field::skip(std::string("budget: ") + e.what());
  } catch (const std::invalid_argument& e) {
    return Field::skip(e.what());
  } catch (const std::out_of_range& e) {
    return Field::skip(e.what());
  }
}

}  // namespace detail

/// Computes every invariant; each solver gets its own budget of
/// `budget_nodes`. Fields that cannot be computed carry the reason instead.
inline InvariantRecord full_record(const Graph& g, std::uint64_t budget_nodes = kDefaultBudget) {
  InvariantRecord rec;
  rec.n = g.order();
  rec.m = g.size();
  const DegreeStats ds = degree_stats(g);
  rec.delta_min = ds.min ? Field::of(*ds.min) : Field::skip("undefined on the graph with no vertices");
  rec.delta_max = ds.max ? Field::of(*ds.max) : Field::skip("undefined on the graph with no vertices");

  rec.diff = detail::guarded([&] { return differential_exact(g, std::nullopt, {false, budget_nodes}).value; });
  rec.gamma = detail::guarded([&] { return domination_number(g, false, budget_nodes).gamma; });
  rec.tau = detail::guarded([&] { return vertex_cover_number(g, budget_nodes).value; });
  rec.alpha = detail::guarded([&] { return independence_number(g, budget_nodes).value; });
  rec.roman = detail::guarded([&] { return roman_domination_number(g, budget_nodes).weight; });
  rec.psi = detail::guarded([&] { return enclaveless_number(g, budget_nodes).value; });
  rec.lambda = rec.alpha.value ? Field::of(rec.m - rec.n + 2 * *rec.alpha.value) : Field::skip(rec.alpha.skipped);

  std::optional<RGraph> rg;
  try {
    rg = build_r(g);
  } catch (const std::out_of_range& e) {
    rec.diff_r = rec.gamma_r = rec.mu = Field::skip(e.what());
    return rec;
  }
  rec.diff_r = detail::guarded([&] { return differential_of_r(*rg, RSearchMode::v_restricted, {false, budget_nodes}).value; });
  rec.gamma_r = detail::guarded([&] { return domination_number(rg->total, false, budget_nodes).gamma; });
  rec.mu = detail::guarded([&] { return mu_invariant(g, budget_nodes).value; });
  return rec;
}

}  // namespace gdiff
