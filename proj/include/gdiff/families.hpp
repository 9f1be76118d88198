#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gdiff/graph.hpp"

namespace gdiff {

enum class FamilyKind { complete, complete_bipartite, kprime, wheel, path, cycle, star, star_plus_edge, empty };

struct FamilySpec {
  FamilyKind kind = FamilyKind::empty;
  int n = 0;  // complete, wheel, path, cycle, star, star_plus_edge, empty
  int p = 0;  // complete_bipartite
  int q = 0;
  int r = 0;  // kprime

  static FamilySpec complete(int n) { return {FamilyKind::complete, n}; }
  static FamilySpec complete_bipartite(int p, int q) { return {FamilyKind::complete_bipartite, 0, p, q}; }
  static FamilySpec kprime(int r) { return {FamilyKind::kprime, 0, 0, 0, r}; }
  static FamilySpec wheel(int n) { return {FamilyKind::wheel, n}; }
  static FamilySpec path(int n) { return {FamilyKind::path, n}; }
  static FamilySpec cycle(int n) { return {FamilyKind::cycle, n}; }
  static FamilySpec star(int n) { return {FamilyKind::star, n}; }
  static FamilySpec star_plus_edge(int n) { return {FamilyKind::star_plus_edge, n}; }
  static FamilySpec empty(int n) { return {FamilyKind::empty, n}; }
};

inline constexpr std::pair<FamilyKind, std::string_view> kFamilyNames[] = {
    {FamilyKind::complete, "complete"}, {FamilyKind::complete_bipartite, "complete_bipartite"},
    {FamilyKind::kprime, "kprime"},     {FamilyKind::wheel, "wheel"},
    {FamilyKind::path, "path"},         {FamilyKind::cycle, "cycle"},
    {FamilyKind::star, "star"},         {FamilyKind::star_plus_edge, "star_plus_edge"},
    {FamilyKind::empty, "empty"},
};

inline std::string_view family_name(FamilyKind kind) {
  for (auto [k, name] : kFamilyNames) {
    if (k == kind) return name;
  }
  return "?";
}

inline std::optional<FamilyKind> family_from_name(std::string_view name) {
  for (auto [k, n] : kFamilyNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

namespace detail {
inline void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}
}  // namespace detail

/// Builds the family member. Labelling conventions:
///   complete_bipartite  P = {0..p-1}, Q = {p..p+q-1}
///   kprime r            K_{r,2r} with P = {0..r-1}, Q = {r..3r-1}, plus the
///                       matching {r+i, 2r+i} for i < r
///   wheel n             rim cycle 0..n-2, apex n-1
///   star n              centre 0, leaves 1..n-1
///   star_plus_edge n    star n plus the edge {1, 2}
inline Graph generate(const FamilySpec& spec) {
  using detail::require;
  std::vector<Edge> e;
  switch (spec.kind) {
    case FamilyKind::complete:
      require(spec.n >= 0, "complete: n >= 0");
      for (Vertex a = 0; a < spec.n; ++a)
        for (Vertex b = a + 1; b < spec.n; ++b) e.emplace_back(a, b);
      return Graph(spec.n, e);
    case FamilyKind::complete_bipartite:
      require(spec.p >= 1 && spec.q >= 1, "complete_bipartite: p, q >= 1");
      for (Vertex a = 0; a < spec.p; ++a)
        for (Vertex b = 0; b < spec.q; ++b) e.emplace_back(a, spec.p + b);
      return Graph(spec.p + spec.q, e);
    case FamilyKind::kprime: {
      require(spec.r >= 2, "kprime: r >= 2");
      const int r = spec.r;
      for (Vertex a = 0; a < r; ++a)
        for (Vertex b = 0; b < 2 * r; ++b) e.emplace_back(a, r + b);
      for (Vertex i = 0; i < r; ++i) e.emplace_back(r + i, 2 * r + i);
      return Graph(3 * r, e);
    }
    case FamilyKind::wheel:
      require(spec.n >= 4, "wheel: n >= 4");
      for (Vertex i = 0; i < spec.n - 1; ++i) {
        e.emplace_back(i, (i + 1) % (spec.n - 1));
        e.emplace_back(i, spec.n - 1);
      }
      return Graph(spec.n, e);
    case FamilyKind::path:
      require(spec.n >= 1, "path: n >= 1");
      for (Vertex i = 0; i + 1 < spec.n; ++i) e.emplace_back(i, i + 1);
      return Graph(spec.n, e);
    case FamilyKind::cycle:
      require(spec.n >= 3, "cycle: n >= 3");
      for (Vertex i = 0; i < spec.n; ++i) e.emplace_back(i, (i + 1) % spec.n);
      return Graph(spec.n, e);
    case FamilyKind::star:
      require(spec.n >= 2, "star: n >= 2");
      for (Vertex i = 1; i < spec.n; ++i) e.emplace_back(0, i);
      return Graph(spec.n, e);
    case FamilyKind::star_plus_edge:
      require(spec.n >= 3, "star_plus_edge: n >= 3");
      for (Vertex i = 1; i < spec.n; ++i) e.emplace_back(0, i);
      e.emplace_back(1, 2);
      return Graph(spec.n, e);
    case FamilyKind::empty:
      require(spec.n >= 0, "empty: n >= 0");
      return Graph(spec.n);
  }
  throw std::invalid_argument("unknown family");
}

struct Bipartition {
  VertexSet smaller;  // P, |P| <= |Q|; ties resolved so that P holds vertex 0
  VertexSet larger;   // Q
};

/// Recognises K_{p,q} (p, q >= 1) and returns its parts.
inline std::optional<Bipartition> complete_bipartite_parts(const Graph& g) {
  if (g.order() < 2 || !is_connected(g)) return std::nullopt;
  const VertexSet side_a = g.vertices() - g.adjacency()[0];
  const VertexSet side_b = g.adjacency()[0];
  for (Vertex v : side_a) {
    if (g.adjacency()[v] != side_b) return std::nullopt;
  }
  for (Vertex v : side_b) {
    if (g.adjacency()[v] != side_a) return std::nullopt;
  }
  if (side_b.size() < side_a.size()) return Bipartition{side_b, side_a};
  return Bipartition{side_a, side_b};
}

}  // namespace gdiff
