#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "gdiff/graph.hpp"

namespace gdiff {

/// R(G): G plus one new vertex per edge, joined to both ends of that edge.
///
/// Indices 0..n-1 of `total` are the vertices of `base` (the V part); the
/// vertex of the i-th edge of `base.edges()` is n + i (the U part).
struct RGraph {
  Graph base;
  Graph total;
  VertexSet v_part;
  VertexSet u_part;
  std::vector<Edge> edge_of_u;  // edge_of_u[i] is the base edge behind vertex n + i

  int base_order() const { return base.order(); }
};

inline RGraph build_r(const Graph& g) {
  const int n = g.order();
  const std::vector<Edge> edges = g.edges();
  const int total_order = n + static_cast<int>(edges.size());
  if (total_order > kCapacity) {
    throw std::out_of_range("R(G) would have " + std::to_string(total_order) + " vertices, capacity is " +
                            std::to_string(kCapacity));
  }
  std::vector<Edge> total_edges = edges;
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    total_edges.emplace_back(edges[i].a, n + i);
    total_edges.emplace_back(edges[i].b, n + i);
  }
  RGraph rg;
  rg.base = g;
  rg.total = Graph(total_order, total_edges);
  rg.v_part = VertexSet::range(n);
  rg.u_part = VertexSet::range(total_order) - rg.v_part;
  rg.edge_of_u = edges;
  return rg;
}

/// The vertex v_e of edge e = {a, b}; symmetric in a and b.
inline Vertex u_vertex_of(const RGraph& rg, Vertex a, Vertex b) {
  const Edge e(a, b);
  auto it = std::lower_bound(rg.edge_of_u.begin(), rg.edge_of_u.end(), e);
  if (it == rg.edge_of_u.end() || *it != e) {
    throw std::invalid_argument("{" + std::to_string(a) + "," + std::to_string(b) + "} is not an edge of the base graph");
  }
  return rg.base_order() + static_cast<Vertex>(it - rg.edge_of_u.begin());
}

/// Checks the structural facts every R(G) satisfies. Returns the names of the
/// violated ones; empty means the value is a well-formed R(G).
///
///   vertex-count  |V(R)| = n + m
///   edge-count    |E(R)| = 3m
///   induced-base  <V> in R equals G
///   edgeless-iff  |V(R)| = n exactly when G has no edges
///   v-degree      deg_R(v) = 2 deg_G(v) for v in V
///   connectivity  G connected iff R connected
///   u-degree      each u in U has exactly two neighbours, adjacent in G
///   partition     {V, U} partitions V(R) with V = {0..n-1}
///   edge-map      edge_of_u is a bijection onto E(G) matching N(u)
inline std::vector<std::string> validate_r(const RGraph& rg) {
  std::vector<std::string> bad;
  const Graph& g = rg.base;
  const Graph& r = rg.total;
  const int n = g.order();
  const int m = g.size();

  if (r.order() != n + m) bad.emplace_back("vertex-count");
  if (r.size() != 3 * m) bad.emplace_back("edge-count");

  const bool partition_ok = rg.v_part == VertexSet::range(n) && !rg.v_part.intersects(rg.u_part) &&
                            (rg.v_part | rg.u_part) == r.vertices();
  if (!partition_ok) bad.emplace_back("partition");

  if (r.order() >= n && induced_subgraph(r, VertexSet::range(n)).graph != g) bad.emplace_back("induced-base");
  if ((r.order() == n) != (m == 0)) bad.emplace_back("edgeless-iff");

  if (r.order() >= n) {
    for (Vertex v = 0; v < n; ++v) {
      if (r.degree(v) != 2 * g.degree(v)) {
        bad.emplace_back("v-degree");
        break;
      }
    }
  }
  if (is_connected(g) != is_connected(r)) bad.emplace_back("connectivity");

  bool u_ok = true;
  bool map_ok = static_cast<int>(rg.edge_of_u.size()) == static_cast<int>(rg.u_part.size()) &&
                rg.edge_of_u == g.edges();
  for (Vertex u : rg.u_part) {
    if (u >= r.order()) continue;
    const VertexSet nu = r.neighbors(u);
    if (nu.size() != 2 || !nu.is_subset_of(rg.v_part) || nu.back_or_none() >= n ||
        !g.adjacent(nu.front(), nu.back_or_none())) {
      u_ok = false;
      continue;
    }
    const int i = u - n;
    if (map_ok && (i < 0 || i >= static_cast<int>(rg.edge_of_u.size()) ||
                   rg.edge_of_u[i] != Edge(nu.front(), nu.back_or_none()))) {
      map_ok = false;
    }
  }
  if (!u_ok) bad.emplace_back("u-degree");
  if (!map_ok) bad.emplace_back("edge-map");
  return bad;
}

}  // namespace gdiff
