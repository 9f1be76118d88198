#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gdiff/vertex_set.hpp"

namespace gdiff {

/// Undirected edge, always stored with a < b.
struct Edge {
  Vertex a = 0;
  Vertex b = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex x, Vertex y) : a(std::min(x, y)), b(std::max(x, y)) {}

  constexpr auto operator<=>(const Edge&) const = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Construction validates symmetry, irreflexivity and index ranges, so every
/// Graph value satisfies them. Use GraphBuilder for incremental construction.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph E_n.
  explicit Graph(int n) : n_(n), adj_(checked_order(n)) {}

  Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (const Edge& e : edges) {
      if (e.a < 0 || e.b >= n) throw std::out_of_range("edge endpoint outside 0..n-1");
      if (e.a == e.b) throw std::invalid_argument("self-loop on vertex " + std::to_string(e.a));
      if (adj_[e.a].contains(e.b)) {
        throw std::invalid_argument("duplicate edge " + std::to_string(e.a) + " " + std::to_string(e.b));
      }
      adj_[e.a].insert(e.b);
      adj_[e.b].insert(e.a);
      ++m_;
    }
  }

  Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Builds from adjacency sets; throws unless the relation is symmetric,
  /// irreflexive and within range.
  static Graph from_adjacency(std::vector<VertexSet> adj) {
    Graph g(static_cast<int>(adj.size()));
    const VertexSet all = VertexSet::range(g.n_);
    int degree_sum = 0;
    for (Vertex v = 0; v < g.n_; ++v) {
      if (!adj[v].is_subset_of(all)) throw std::out_of_range("adjacency member outside 0..n-1");
      if (adj[v].contains(v)) throw std::invalid_argument("self-loop on vertex " + std::to_string(v));
      for (Vertex w : adj[v]) {
        if (!adj[w].contains(v)) throw std::invalid_argument("adjacency not symmetric");
      }
      degree_sum += adj[v].size();
    }
    g.adj_ = std::move(adj);
    g.m_ = degree_sum / 2;
    return g;
  }

  int order() const { return n_; }
  int size() const { return m_; }
  VertexSet vertices() const { return VertexSet::range(n_); }

  VertexSet neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
  }
  int degree(Vertex v) const { return neighbors(v).size(); }
  bool adjacent(Vertex a, Vertex b) const {
    check_vertex(b);
    return neighbors(a).contains(b);
  }

  /// Adjacency rows without bounds checks, for the solvers' inner loops.
  std::span<const VertexSet> adjacency() const { return adj_; }

  /// Edges sorted lexicographically by (a, b).
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex a = 0; a < n_; ++a) {
      for (Vertex b : adj_[a]) {
        if (a < b) out.emplace_back(a, b);
      }
    }
    return out;
  }

  const std::vector<std::string>& labels() const { return labels_; }
  Graph with_labels(std::vector<std::string> labels) const {
    if (!labels.empty() && static_cast<int>(labels.size()) != n_) {
      throw std::invalid_argument("label count differs from vertex count");
    }
    Graph g = *this;
    g.labels_ = std::move(labels);
    return g;
  }

  /// Structural equality; labels are ignored.
  friend bool operator==(const Graph& x, const Graph& y) { return x.n_ == y.n_ && x.adj_ == y.adj_; }

  void check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " outside 0..n-1");
  }
  void check_subset(VertexSet s) const {
    if (!s.is_subset_of(vertices())) throw std::out_of_range("set member outside 0..n-1: " + s.to_string());
  }

 private:
  static int checked_order(int n) {
    if (n < 0 || n > kCapacity) {
      throw std::out_of_range("graph order " + std::to_string(n) + " outside [0, " + std::to_string(kCapacity) + "]");
    }
    return n;
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
};

/// Mutable accumulator for Graph. Rejects self-loops and duplicate edges.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n) : n_(n) {
    if (n < 0 || n > kCapacity) throw std::out_of_range("graph order outside capacity");
  }

  GraphBuilder& add_edge(Vertex a, Vertex b) {
    if (a < 0 || b < 0 || a >= n_ || b >= n_) throw std::out_of_range("edge endpoint outside 0..n-1");
    if (a == b) throw std::invalid_argument("self-loop on vertex " + std::to_string(a));
    Edge e(a, b);
    if (std::find(edges_.begin(), edges_.end(), e) != edges_.end()) {
      throw std::invalid_argument("duplicate edge " + std::to_string(e.a) + " " + std::to_string(e.b));
    }
    edges_.push_back(e);
    return *this;
  }

  bool has_edge(Vertex a, Vertex b) const {
    return std::find(edges_.begin(), edges_.end(), Edge(a, b)) != edges_.end();
  }

  Graph build() const { return Graph(n_, edges_); }

 private:
  int n_;
  std::vector<Edge> edges_;
};

// ---------------------------------------------------------------------------
// Set-level primitives. All of them validate their inputs against G.
// ---------------------------------------------------------------------------

inline VertexSet open_neighborhood(const Graph& g, Vertex v) { return g.neighbors(v); }

inline VertexSet closed_neighborhood(const Graph& g, Vertex v) { return g.neighbors(v).with(v); }

inline VertexSet set_neighborhood(const Graph& g, VertexSet s, bool closed = false) {
  g.check_subset(s);
  VertexSet out;
  for (Vertex v : s) out |= g.adjacency()[v];
  return closed ? out | s : out;
}

/// B(S) = N(S) \ S
inline VertexSet boundary(const Graph& g, VertexSet s) { return set_neighborhood(g, s) - s; }

/// C(S) = V \ (B(S) u S)
inline VertexSet exterior(const Graph& g, VertexSet s) {
  return g.vertices() - set_neighborhood(g, s, /*closed=*/true);
}

/// |B(S)| - |S|
inline int set_differential(const Graph& g, VertexSet s) { return boundary(g, s).size() - s.size(); }

/// epn[v, S]: neighbours of v outside S that no other member of S reaches.
inline VertexSet external_private_neighbors(const Graph& g, Vertex v, VertexSet s) {
  g.check_subset(s);
  if (!s.contains(v)) throw std::invalid_argument("vertex " + std::to_string(v) + " is not a member of S");
  return (g.adjacency()[v] - s) - set_neighborhood(g, s.without(v));
}

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> old_to_new;  // -1 for vertices outside S
  std::vector<Vertex> new_to_old;
};

/// <S>, relabelled 0..|S|-1 in increasing order of the original indices.
inline InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
  g.check_subset(s);
  InducedSubgraph out;
  out.old_to_new.assign(g.order(), -1);
  for (Vertex v : s) {
    out.old_to_new[v] = static_cast<Vertex>(out.new_to_old.size());
    out.new_to_old.push_back(v);
  }
  std::vector<Edge> edges;
  for (Vertex v : s) {
    for (Vertex w : g.adjacency()[v] & s) {
      if (v < w) edges.emplace_back(out.old_to_new[v], out.old_to_new[w]);
    }
  }
  out.graph = Graph(s.size(), edges);
  return out;
}

struct DegreeStats {
  std::vector<int> degrees;
  std::optional<int> min;  // empty for the graph on zero vertices
  std::optional<int> max;
};

inline DegreeStats degree_stats(const Graph& g) {
  DegreeStats out;
  for (Vertex v = 0; v < g.order(); ++v) out.degrees.push_back(g.adjacency()[v].size());
  if (!out.degrees.empty()) {
    auto [lo, hi] = std::minmax_element(out.degrees.begin(), out.degrees.end());
    out.min = *lo;
    out.max = *hi;
  }
  return out;
}

struct Connectivity {
  bool connected = false;
  std::vector<VertexSet> components;  // ordered by smallest member
};

inline Connectivity connectivity(const Graph& g) {
  Connectivity out;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    VertexSet comp = VertexSet::singleton(unseen.front());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= g.adjacency()[v];
      frontier = next - comp;
      comp |= frontier;
    }
    out.components.push_back(comp);
    unseen -= comp;
  }
  out.connected = out.components.size() == 1;
  return out;
}

inline bool is_connected(const Graph& g) { return connectivity(g).connected; }

/// True iff the subgraph induced by S has maximum degree at most k.
inline bool is_k_dependent(const Graph& g, VertexSet s, int k) {
  g.check_subset(s);
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  return std::all_of(s.begin(), s.end(), [&](Vertex v) { return (g.adjacency()[v] & s).size() <= k; });
}

}  // namespace gdiff
