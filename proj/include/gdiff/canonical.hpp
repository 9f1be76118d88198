#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "gdiff/codec.hpp"
#include "gdiff/graph.hpp"

namespace gdiff {

inline constexpr int kCanonicalMaxOrder = 8;
inline constexpr int kCensusMaxOrder = 7;

/// graph6 text of the relabelling whose upper-triangle bit string (graph6
/// order) is smallest over all n! vertex permutations. Two graphs of order
/// <= 8 have equal forms exactly when they are isomorphic.
struct CanonicalForm {
  std::string graph6;

  auto operator<=>(const CanonicalForm&) const = default;
};

inline CanonicalForm canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > kCanonicalMaxOrder) {
    throw std::invalid_argument("canonical_form: order " + std::to_string(n) + " above " +
                                std::to_string(kCanonicalMaxOrder));
  }
  const int pairs = n * (n - 1) / 2;
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const auto adj = g.adjacency();
  // Bit string read as an integer, first pair most significant; with a fixed
  // length this orders exactly like the graph6 text.
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<Vertex> best_perm = perm;
  do {
    std::uint64_t code = 0;
    bool worse = false;
    for (int j = 1; j < n && !worse; ++j) {
      const VertexSet row = adj[perm[j]];
      for (int i = 0; i < j; ++i) code = (code << 1) | (row.contains(perm[i]) ? 1U : 0U);
      const int rest = pairs - j * (j + 1) / 2;
      worse = best != ~std::uint64_t{0} && code > (best >> rest);
    }
    if (!worse && code < best) {
      best = code;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (adj[best_perm[j]].contains(best_perm[i])) edges.emplace_back(i, j);
  return {write_graph6(Graph(n, edges))};
}

namespace detail {

inline bool extend_isomorphism(const Graph& g, const Graph& h, const std::vector<Vertex>& order, std::size_t depth,
                               std::vector<Vertex>& map, VertexSet used) {
  if (depth == order.size()) return true;
  const Vertex v = order[depth];
  for (Vertex w : h.vertices() - used) {
    if (g.degree(v) != h.degree(w)) continue;
    bool ok = true;
    for (std::size_t k = 0; k < depth && ok; ++k) {
      ok = g.adjacent(v, order[k]) == h.adjacent(w, map[order[k]]);
    }
    if (!ok) continue;
    map[v] = w;
    if (extend_isomorphism(g, h, order, depth + 1, map, used.with(w))) return true;
  }
  return false;
}

}  // namespace detail

/// Isomorphism test for any order: canonical forms when small, otherwise
/// degree-filtered backtracking in BFS order.
inline bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  auto dg = degree_stats(g).degrees;
  auto dh = degree_stats(h).degrees;
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  if (g.order() <= kCanonicalMaxOrder) return canonical_form(g) == canonical_form(h);

  std::vector<Vertex> order;
  VertexSet seen;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen.contains(s)) continue;
    seen.insert(s);
    std::size_t at = order.size();
    order.push_back(s);
    for (; at < order.size(); ++at) {
      for (Vertex w : g.adjacency()[order[at]] - seen) {
        seen.insert(w);
        order.push_back(w);
      }
    }
  }
  std::vector<Vertex> map(g.order(), -1);
  return detail::extend_isomorphism(g, h, order, 0, map, VertexSet{});
}

/// Graph on n vertices whose edges are the set bits of `mask`, bit k being
/// the k-th pair in graph6 order.
inline Graph graph_from_pair_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k)
      if ((mask >> k) & 1U) edges.emplace_back(i, j);
  return Graph(n, edges);
}

/// Streams connected graphs of order n (1 <= n <= 7) to `sink`.
///
/// Without dedup every labelled connected graph is produced in edge-mask
/// order. With dedup exactly one representative per isomorphism class is
/// produced: the canonical relabelling, in the mask order of its first
/// occurrence. Only masks whose degree sequence is non-increasing along the
/// vertex index are canonicalised; every class has such a labelling.
inline void enumerate_connected(int n, bool dedup, const std::function<void(const Graph&)>& sink) {
  if (n < 1 || n > kCensusMaxOrder) throw std::invalid_argument("enumerate_connected: n must be in 1..7");
  const int pairs = n * (n - 1) / 2;
  std::unordered_set<std::string> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    if (dedup) {
      int deg[kCensusMaxOrder] = {};
      int k = 0;
      for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
          if ((mask >> k) & 1U) ++deg[i], ++deg[j];
      if (!std::is_sorted(deg, deg + n, std::greater<>())) continue;
    }
    const Graph g = graph_from_pair_mask(n, mask);
    if (!is_connected(g)) continue;
    if (!dedup) {
      sink(g);
      continue;
    }
    CanonicalForm form = canonical_form(g);
    if (seen.insert(form.graph6).second) sink(parse_graph6(form.graph6));
  }
}

inline std::vector<Graph> connected_graphs(int n, bool dedup = true) {
  std::vector<Graph> out;
  enumerate_connected(n, dedup, [&](const Graph& g) { out.push_back(g); });
  return out;
}

/// Connected isomorphism-class representatives of orders n_min..n_max.
inline std::vector<Graph> census(int n_min, int n_max) {
  std::vector<Graph> out;
  for (int n = n_min; n <= n_max; ++n) {
    auto part = connected_graphs(n, true);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace gdiff
