#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gdiff/canonical.hpp"
#include "gdiff/codec.hpp"
#include "gdiff/families.hpp"
#include "gdiff/graph.hpp"
#include "gdiff/r_graph.hpp"
#include "gdiff/solvers.hpp"

namespace gdiff {

enum class Status { pass, fail, vacuous, skipped };

inline std::string_view status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::vacuous: return "vacuous";
    case Status::skipped: return "skipped";
  }
  return "?";
}

/// Outcome of one check on one graph. A fail carries the offending sets
/// verbatim so they can be replayed against the primitives.
struct CheckReport {
  std::string prop;
  std::string instance_g6;
  Status status = Status::vacuous;
  std::vector<VertexSet> witness_sets;
  std::string note;
  std::chrono::nanoseconds elapsed{0};
};

struct CheckOptions {
  std::uint64_t budget = kDefaultBudget;
};

/// Per-graph cache shared by all checks run on one instance. Not thread-safe;
/// each worker owns its own.
class Instance {
 public:
  Instance(Graph g, CheckOptions opts) : g_(std::move(g)), opts_(opts) {}

  const Graph& graph() const { return g_; }
  int n() const { return g_.order(); }
  std::uint64_t budget() const { return opts_.budget; }

  bool connected() {
    if (!connected_) connected_ = is_connected(g_);
    return *connected_;
  }
  /// Standing assumption of the R(G) results: connected, order >= 3.
  bool standard() { return n() >= 3 && connected(); }
  int min_degree() { return degree_stats(g_).min.value_or(0); }
  int max_degree() { return degree_stats(g_).max.value_or(0); }

  const RGraph& r() {
    if (!r_) r_ = build_r(g_);
    return *r_;
  }
  /// Every differential set of G.
  const DifferentialResult& g_diff() {
    if (!g_diff_) g_diff_ = differential_exact(g_, std::nullopt, {true, opts_.budget});
    return *g_diff_;
  }
  /// Every differential set of R(G) contained in V.
  const DifferentialResult& r_diff_v() {
    if (!r_diff_v_) r_diff_v_ = differential_exact(r().total, r().v_part, {true, opts_.budget});
    return *r_diff_v_;
  }
  /// Every differential set of R(G).
  const DifferentialResult& r_diff_full() {
    if (!r_diff_full_) r_diff_full_ = differential_exact(r().total, std::nullopt, {true, opts_.budget});
    return *r_diff_full_;
  }
  int alpha() {
    if (!alpha_) alpha_ = independence_number(g_, opts_.budget).value;
    return *alpha_;
  }
  int lambda() { return g_.size() - n() + 2 * alpha(); }
  int mu() { return *r_diff_v().max_card; }

 private:
  Graph g_;
  CheckOptions opts_;
  std::optional<bool> connected_;
  std::optional<RGraph> r_;
  std::optional<DifferentialResult> g_diff_;
  std::optional<DifferentialResult> r_diff_v_;
  std::optional<DifferentialResult> r_diff_full_;
  std::optional<int> alpha_;
};

struct Verdict {
  Status status = Status::vacuous;
  std::vector<VertexSet> sets;
  std::string note;

  static Verdict vacuous(std::string why) { return {Status::vacuous, {}, std::move(why)}; }
  static Verdict pass(std::vector<VertexSet> sets = {}, std::string note = {}) {
    return {Status::pass, std::move(sets), std::move(note)};
  }
  static Verdict fail(std::vector<VertexSet> sets, std::string note) {
    return {Status::fail, std::move(sets), std::move(note)};
  }
};

struct PropositionCheck {
  std::string_view id;
  std::string_view title;
  std::string_view hypothesis;
  std::string_view verdict;
  Verdict (*run)(Instance&);
};

namespace checks {

inline std::string cat(std::initializer_list<std::string> parts) {
  std::string out;
  for (const auto& p : parts) out += p;
  return out;
}
inline std::string str(long long v) { return std::to_string(v); }

inline constexpr std::string_view kNotStandard = "needs a connected graph of order >= 3";

inline Verdict r_structure(Instance& in) {
  const auto bad = validate_r(in.r());
  if (bad.empty()) return Verdict::pass({}, cat({"|V(R)|=", str(in.r().total.order()), " |E(R)|=", str(in.r().total.size())}));
  std::string names;
  for (const auto& b : bad) names += (names.empty() ? "" : ",") + b;
  return Verdict::fail({}, "violated: " + names);
}

inline Verdict min_dominating_inside_v(Instance& in) {
  if (!in.standard()) return Verdict::vacuous(std::string(kNotStandard));
  const DominationResult dom = domination_number(in.r().total, true, in.budget());
  for (VertexSet s : dom.all_min) {
    if (s.is_subset_of(in.r().v_part)) {
      return Verdict::pass({s}, cat({"gamma(R)=", str(dom.gamma), ", ", str(dom.all_min.size()), " minimum dominating sets"}));
    }
  }
  return Verdict::fail(dom.all_min, "no minimum dominating set of R(G) lies inside V");
}

inline Verdict same_size_inside_v(Instance& in) {
  if (!in.standard()) return Verdict::vacuous(std::string(kNotStandard));
  const DifferentialResult& full = in.r_diff_full();
  const DifferentialResult& inside = in.r_diff_v();
  if (full.value != inside.value) {
    return Verdict::fail({full.witness, inside.witness},
                         cat({"full search gives ", str(full.value), ", V-restricted gives ", str(inside.value)}));
  }
  for (VertexSet d : full.all_sets) {
    const bool matched = std::any_of(inside.all_sets.begin(), inside.all_sets.end(),
                                     [&](VertexSet s) { return s.size() == d.size(); });
    if (!matched) return Verdict::fail({d}, cat({"no differential set inside V of size ", str(d.size())}));
  }
  return Verdict::pass({inside.witness}, cat({"d(R)=", str(full.value), ", ", str(full.all_sets.size()),
                                              " differential sets, ", str(inside.all_sets.size()), " inside V"}));
}

inline Verdict extends_to_dominating(Instance& in) {
  if (!in.standard()) return Verdict::vacuous(std::string(kNotStandard));
  const auto& sets = in.r_diff_v().all_sets;
  VertexSet example;
  for (VertexSet s : sets) {
    auto it = std::find_if(sets.begin(), sets.end(),
                           [&](VertexSet t) { return s.is_subset_of(t) && is_dominating(in.graph(), t); });
    if (it == sets.end()) return Verdict::fail({s}, "differential set inside V has no dominating differential superset inside V");
    if (s == sets.front()) example = *it;
  }
  return Verdict::pass({example}, cat({str(sets.size()), " differential sets inside V extended"}));
}

inline Verdict min_degree_two_dominates(Instance& in) {
  if (!in.standard()) return Verdict::vacuous(std::string(kNotStandard));
  if (in.min_degree() < 2) return Verdict::vacuous("min degree " + str(in.min_degree()) + " < 2");
  for (VertexSet s : in.r_diff_v().all_sets) {
    if (!is_dominating(in.graph(), s)) return Verdict::fail({s}, "differential set of R(G) inside V does not dominate G");
  }
  return Verdict::pass({}, str(in.r_diff_v().all_sets.size()) + " differential sets inside V all dominate G");
}

inline Verdict cardinality_bound(Instance& in) {
  if (!in.standard()) return Verdict::vacuous(std::string(kNotStandard));
  if (in.min_degree() < 2) return Verdict::vacuous("min degree " + str(in.min_degree()) + " < 2");
  const auto& xs = in.g_diff().all_sets;
  const auto& ys = in.r_diff_full().all_sets;
  const VertexSet largest_x = *std::max_element(xs.begin(), xs.end(), [](VertexSet a, VertexSet b) { return a.size() < b.size(); });
  const VertexSet smallest_y = *std::min_element(ys.begin(), ys.end(), [](VertexSet a, VertexSet b) { return a.size() < b.size(); });
  const std::string sizes = cat({"max|X|=", str(largest_x.size()), " min|Y|=", str(smallest_y.size()), " over ",
                                 str(xs.size()), "x", str(ys.size()), " pairs"});
  if (smallest_y.size() < largest_x.size()) return Verdict::fail({largest_x, smallest_y}, "|Y| < |X| for X, Y: " + sizes);
  return Verdict::pass({}, sizes);
}

inline Verdict degree_characterizations(Instance& in) {
  if (!in.standard()) return Verdict::vacuous(std::string(kNotStandard));
  const int n = in.n();
  const int big_delta = in.max_degree();
  const int d = in.g_diff().value;
  const std::string values = cat({"Delta=", str(big_delta), " d=", str(d), " n=", str(n)});
  if ((big_delta == n - 1) != (d == n - 2)) return Verdict::fail({in.g_diff().witness}, "(a) fails: " + values);
  if ((big_delta == n - 2) != (d == n - 3)) return Verdict::fail({in.g_diff().witness}, "(b) fails: " + values);
  if (big_delta == n - 3 && d != n - 4) return Verdict::fail({in.g_diff().witness}, "(c) fails: " + values);
  return Verdict::pass({}, values);
}

inline Verdict r_near_maximum(Instance& in) {
  if (!in.standard()) return Verdict::vacuous(std::string(kNotStandard));
  const int n = in.n();
  const int total = in.r().total.order();
  const int d = in.r_diff_v().value;
  const bool star = are_isomorphic(in.graph(), generate(FamilySpec::star(n)));
  const bool star_edge = are_isomorphic(in.graph(), generate(FamilySpec::star_plus_edge(n)));
  const std::string values = cat({"d(R)=", str(d), " |V(R)|=", str(total), " star=", star ? "yes" : "no",
                                  " star+edge=", star_edge ? "yes" : "no"});
  if ((d == total - 2) != star) return Verdict::fail({in.r_diff_v().witness}, "(i) fails: " + values);
  if ((d == total - 3) != star_edge) return Verdict::fail({in.r_diff_v().witness}, "(ii) fails: " + values);
  return Verdict::pass({}, values);
}

inline Verdict bipartite_unique(Instance& in) {
  const auto parts = complete_bipartite_parts(in.graph());
  if (!parts) return Verdict::vacuous("not complete bipartite");
  const int p = parts->smaller.size();
  const int q = parts->larger.size();
  if (!(p < q && p + q >= 4)) return Verdict::vacuous(cat({"K_{", str(p), ",", str(q), "} outside p<q, p+q>=4"}));
  const auto& all = in.r_diff_full().all_sets;
  if (all.size() != 1 || all.front() != parts->smaller) {
    return Verdict::fail(all, cat({str(all.size()), " differential sets of R(K_{", str(p), ",", str(q), "}); expected only P=",
                                   parts->smaller.to_string()}));
  }
  return Verdict::pass(all, cat({"P is the only differential set, d(R)=", str(in.r_diff_full().value)}));
}

inline Verdict exact_values(Instance& in) {
  if (!in.standard()) return Verdict::vacuous(std::string(kNotStandard));
  const Graph& g = in.graph();
  const int n = in.n();
  const int m = g.size();
  const int d = in.r_diff_v().value;
  std::string applied;
  auto expect = [&](std::string_view label, long long want) -> std::optional<Verdict> {
    applied += (applied.empty() ? "" : "; ") + std::string(label) + "=" + str(want);
    if (d != want) return Verdict::fail({in.r_diff_v().witness}, cat({std::string(label), ": expected ", str(want), ", got ", str(d)}));
    return std::nullopt;
  };

  if (m == n * (n - 1) / 2) {
    if (auto f = expect("(i) K_n", static_cast<long long>(n) * (n - 1) / 2 - n + 3)) return *f;
    if (n >= 4) {
      // Every S inside V of size n-3..n, against the closed-form case table.
      const int base = n * (n - 1) / 2 - n;
      const int table[4] = {base + 3, base + 3, base + 2, base};
      SearchBudget budget(in.budget());
      for (int c = 0; c < 4; ++c) {
        std::optional<Verdict> bad;
        for_each_k_subset(in.r().total, in.r().v_part, n - 3 + c, budget, [&](VertexSet s, VertexSet) {
          if (!bad && set_differential(in.r().total, s) != table[c]) {
            bad = Verdict::fail({s}, cat({"case table: |S|=", str(n - 3 + c), " expected ", str(table[c]), ", got ",
                                          str(set_differential(in.r().total, s))}));
          }
        });
        if (bad) return *bad;
      }
      applied += " (case table |S|=n-3..n ok)";
    }
  }
  if (n >= 4 && m == 2 * (n - 1) && are_isomorphic(g, generate(FamilySpec::wheel(n)))) {
    if (auto f = expect("(ii) W_n", 2 * n - 3)) return *f;
  }
  if (auto parts = complete_bipartite_parts(g); parts && n >= 4) {
    const int p = parts->smaller.size();
    const int q = parts->larger.size();
    if (auto f = expect("(iii) K_{p,q}", static_cast<long long>(q) * (p + 1) - p)) return *f;
  }
  if (applied.empty()) return Verdict::vacuous("not K_n, W_n or K_{p,q}");
  return Verdict::pass({in.r_diff_v().witness}, applied);
}

inline Verdict cover_domination_duality(Instance& in) {
  if (!in.standard()) return Verdict::vacuous(std::string(kNotStandard));
  const SetResult cover = vertex_cover_number(in.graph(), in.budget());
  const DominationResult dom = domination_number(in.r().total, false, in.budget());
  const std::string values = cat({"tau=", str(cover.value), " gamma(R)=", str(dom.gamma)});
  if (cover.value != dom.gamma) return Verdict::fail({cover.witness, dom.witness}, values);
  return Verdict::pass({cover.witness, dom.witness}, values);
}

inline Verdict cover_differential_sets(Instance& in) {
  if (!in.standard()) return Verdict::vacuous(std::string(kNotStandard));
  const int dr = in.r_diff_v().value;
  std::vector<VertexSet> covers;
  for (VertexSet s : in.g_diff().all_sets) {
    if (!is_vertex_cover(in.graph(), s)) continue;
    if (set_differential(in.r().total, s) != dr) {
      return Verdict::fail({s}, cat({"vertex-cover differential set of G has d_R(S)=", str(set_differential(in.r().total, s)),
                                     " < d(R)=", str(dr)}));
    }
    covers.push_back(s);
  }
  if (covers.empty()) return Verdict::vacuous("no differential set of G is a vertex cover");
  return Verdict::pass(covers, str(covers.size()) + " vertex-cover differential sets are differential in R(G)");
}

inline Verdict boundary_dependence(Instance& in) {
  if (!in.standard()) return Verdict::vacuous(std::string(kNotStandard));
  const Graph& g = in.graph();
  const Graph& r = in.r().total;
  const int dr = in.r_diff_v().value;
  const int mu = in.mu();
  int maximal = 0;
  for (VertexSet s : in.r_diff_v().all_sets) {
    const VertexSet b = boundary(g, s);
    if (!is_k_dependent(g, b, 2)) return Verdict::fail({s, b}, "<B_G(S)> is not 2-dependent");
    const VertexSet outside = in.r().v_part - s;
    const bool is_maximal = std::none_of(outside.begin(), outside.end(),
                                         [&](Vertex v) { return set_differential(r, s.with(v)) >= dr; });
    if (s.size() == mu && !is_maximal) return Verdict::fail({s}, "maximum-cardinality differential set is not maximal");
    if (is_maximal) {
      ++maximal;
      if (!is_k_dependent(g, b, 1)) return Verdict::fail({s, b}, "maximal differential set with <B_G(S)> not 1-dependent");
    }
  }
  return Verdict::pass({}, cat({str(in.r_diff_v().all_sets.size()), " differential sets inside V, ", str(maximal), " maximal"}));
}

inline Verdict exterior_bound(Instance& in) {
  if (!in.standard()) return Verdict::vacuous(std::string(kNotStandard));
  const int mu = in.mu();
  int checked = 0;
  for (VertexSet s : in.r_diff_v().all_sets) {
    if (s.size() != mu) continue;
    const int c = exterior(in.r().total, s).size();
    if (2 * c > in.n() - mu) {
      return Verdict::fail({s, exterior(in.r().total, s)}, cat({"|C(S)|=", str(c), " > (n-mu)/2 with n=", str(in.n()), " mu=", str(mu)}));
    }
    ++checked;
  }
  return Verdict::pass({}, cat({"mu=", str(mu), ", ", str(checked), " maximum differential sets checked"}));
}

inline Verdict main_bounds(Instance& in) {
  if (!in.standard()) return Verdict::vacuous(std::string(kNotStandard));
  const int lambda = in.lambda();
  const int mu = in.mu();
  const int dr = in.r_diff_v().value;
  const int upper = lambda + (in.n() - mu) / 2;
  const std::string values = cat({"lambda=", str(lambda), " d(R)=", str(dr), " upper=", str(upper), " mu=", str(mu)});
  if (dr < lambda || dr > upper) return Verdict::fail({in.r_diff_v().witness}, values);
  return Verdict::pass({in.r_diff_v().witness}, values + (dr == lambda ? " (lower tight)" : "") + (dr == upper ? " (upper tight)" : ""));
}

inline Verdict tightness(Instance& in) {
  const Graph& g = in.graph();
  const int n = in.n();
  if (auto parts = complete_bipartite_parts(g); parts && parts->smaller.size() >= 2 &&
                                                 parts->larger.size() == 2 * parts->smaller.size()) {
    const int dr = in.r_diff_v().value;
    const std::string values = cat({"K_{r,2r} r=", str(parts->smaller.size()), " d(R)=", str(dr), " lambda=", str(in.lambda())});
    if (dr != in.lambda()) return Verdict::fail({in.r_diff_v().witness}, values);
    return Verdict::pass({in.r_diff_v().witness}, values);
  }
  if (n % 3 == 0 && n >= 6) {
    const int r = n / 3;
    if (g.size() == 2 * r * r + r && are_isomorphic(g, generate(FamilySpec::kprime(r)))) {
      const int dr = in.r_diff_v().value;
      const int want = in.lambda() + (3 * r - in.mu()) / 2;
      const std::string values = cat({"K'_{r,2r} r=", str(r), " d(R)=", str(dr), " lambda=", str(in.lambda()), " mu=",
                                      str(in.mu()), " lambda+floor((3r-mu)/2)=", str(want)});
      if (dr != want) return Verdict::fail({in.r_diff_v().witness}, values);
      return Verdict::pass({in.r_diff_v().witness}, values);
    }
  }
  return Verdict::vacuous("not K_{r,2r} or K'_{r,2r} with r >= 2");
}

inline Verdict roman_identity(Instance& in) {
  if (in.n() == 0) return Verdict::vacuous("empty graph");
  const RomanResult roman = roman_domination_number(in.graph(), in.budget());
  const int d = in.g_diff().value;
  const std::string values = cat({"d=", str(d), " gamma_R=", str(roman.weight), " n=", str(in.n())});
  VertexSet twos;
  for (Vertex v = 0; v < in.n(); ++v)
    if (roman.labels[v] == 2) twos.insert(v);
  if (d + roman.weight != in.n()) return Verdict::fail({in.g_diff().witness, twos}, values);
  return Verdict::pass({in.g_diff().witness, twos}, values);
}

inline Verdict common_set_audit(Instance& in) {
  if (in.n() != 7 || in.graph().size() != 6 || !are_isomorphic(in.graph(), generate(FamilySpec::path(7)))) {
    return Verdict::vacuous("instance is not P_7");
  }
  // Any common differential set is a differential set of P_7, so scanning
  // those against d(R(P_7)) is exhaustive.
  const auto& xs = in.g_diff().all_sets;
  const int dr = in.r_diff_full().value;
  std::string detail;
  for (VertexSet x : xs) {
    const int in_r = set_differential(in.r().total, x);
    detail += cat({" ", x.to_string(), "->", str(in_r)});
    if (in_r == dr) {
      return Verdict::pass({x}, cat({"common differential set found: d(P_7)=", str(in.g_diff().value), " d(R(P_7))=", str(dr)}));
    }
  }
  std::vector<VertexSet> certificate = xs;
  certificate.push_back(in.r_diff_full().witness);
  return Verdict::fail(certificate,
                       cat({"no common differential set: d(P_7)=", str(in.g_diff().value), " with ", str(xs.size()),
                            " differential sets; d(R(P_7))=", str(dr), " (last set is an R(P_7) witness); d_R(X) per set:", detail}));
}

inline Verdict bipartite_pairs_remark(Instance& in) {
  const auto parts = complete_bipartite_parts(in.graph());
  if (!parts || parts->smaller.size() < 3 || parts->larger.size() <= parts->smaller.size()) {
    return Verdict::vacuous("not K_{p,q} with q > p >= 3");
  }
  for (VertexSet s : in.g_diff().all_sets) {
    if (s.size() != 2 || !s.intersects(parts->smaller) || !s.intersects(parts->larger)) {
      return Verdict::fail({s}, cat({"differential set ", s.to_string(), " with d=", str(in.g_diff().value),
                                     " is not a cross pair"}));
    }
  }
  return Verdict::pass({}, str(in.g_diff().all_sets.size()) + " differential sets, all cross pairs");
}

}  // namespace checks

/// P01..P18 in order, followed by auxiliary checks that "all" does not select.
inline const std::vector<PropositionCheck>& registry() {
  static const std::vector<PropositionCheck> checks = {
      {"P01", "structure of R(G)", "any graph", "validate_r reports no violated item", checks::r_structure},
      {"P02", "minimum dominating set inside V", "connected, n>=3",
       "some minimum dominating set of R(G) is a subset of V", checks::min_dominating_inside_v},
      {"P03", "differential set inside V of equal size", "connected, n>=3",
       "full and V-restricted searches agree; every maximizer size occurs inside V", checks::same_size_inside_v},
      {"P04", "extension to a dominating differential set", "connected, n>=3",
       "each differential set inside V has a superset inside V that is differential and dominates G",
       checks::extends_to_dominating},
      {"P05", "min degree 2 forces domination", "connected, n>=3, min degree >= 2",
       "every differential set of R(G) inside V dominates G", checks::min_degree_two_dominates},
      {"P06", "|Y| >= |X|", "connected, n>=3, min degree >= 2",
       "every differential set Y of R(G) is at least as large as every differential set X of G",
       checks::cardinality_bound},
      {"P07", "Delta / differential characterizations", "connected, n>=3",
       "(a),(b) as biconditionals, (c) forward", checks::degree_characterizations},
      {"P08", "d(R(G)) = |V(R)|-2 / |V(R)|-3", "connected, n>=3",
       "biconditionals against the star and the star plus an edge", checks::r_near_maximum},
      {"P09", "uniqueness for R(K_{p,q})", "K_{p,q}, p<q, p+q>=4",
       "full enumeration yields exactly the smaller part P", checks::bipartite_unique},
      {"P10", "exact values for K_n, W_n, K_{p,q}", "connected, n>=3, recognised family",
       "closed forms, and the K_n case table for n>=4", checks::exact_values},
      {"P11", "tau(G) = gamma(R(G))", "connected, n>=3", "independent solvers agree", checks::cover_domination_duality},
      {"P12", "vertex-cover differential sets", "connected, n>=3",
       "each differential set of G that covers every edge is differential in R(G)", checks::cover_differential_sets},
      {"P13", "dependence of the boundary", "connected, n>=3",
       "<B_G(S)> 2-dependent for differential S inside V, 1-dependent for maximal S", checks::boundary_dependence},
      {"P14", "exterior bound", "connected, n>=3",
       "|C_R(S)| <= (n - mu)/2 for maximum differential sets inside V", checks::exterior_bound},
      {"P15", "main bounds", "connected, n>=3", "lambda <= d(R(G)) <= lambda + floor((n - mu)/2)", checks::main_bounds},
      {"P16", "tightness", "K_{r,2r} or K'_{r,2r}, r>=2", "lower bound tight on K_{r,2r}, upper on K'_{r,2r}",
       checks::tightness},
      {"P17", "d(G) + gamma_R(G) = n", "n>=1", "labeling search for gamma_R against the differential solver",
       checks::roman_identity},
      {"P18", "common differential set of P_7 and R(P_7)", "graph isomorphic to P_7",
       "exhaustive search for a set differential in both graphs", checks::common_set_audit},
      {"A01", "differential sets of K_{p,q} are cross pairs", "K_{p,q}, q>p>=3",
       "every differential set of G has two vertices in different parts", checks::bipartite_pairs_remark},
  };
  return checks;
}

inline const PropositionCheck& find_check(std::string_view id) {
  for (const auto& c : registry()) {
    if (c.id == id) return c;
  }
  throw std::invalid_argument("unknown proposition id '" + std::string(id) + "'");
}

/// Comma-separated ids; the token "all" expands to P01..P18.
inline std::vector<std::string> parse_prop_list(std::string_view list) {
  std::vector<std::string> out;
  auto add = [&](const std::string& id) {
    if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
  };
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t end = list.find(',', start);
    if (end == std::string_view::npos) end = list.size();
    const std::string id(list.substr(start, end - start));
    if (id == "all") {
      for (const auto& c : registry())
        if (c.id.starts_with('P')) add(std::string(c.id));
    } else if (!id.empty()) {
      add(std::string(find_check(id).id));
    }
    start = end + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty proposition list");
  return out;
}

/// Runs the checks on one graph, sharing intermediate results between them.
inline std::vector<CheckReport> run_checks(const Graph& g, const std::vector<std::string>& ids, CheckOptions opts = {}) {
  Instance in(g, opts);
  const std::string g6 = write_graph6(g);
  std::vector<CheckReport> out;
  for (const auto& id : ids) {
    const PropositionCheck& check = find_check(id);
    CheckReport rep;
    rep.prop = std::string(check.id);
    rep.instance_g6 = g6;
    const auto start = std::chrono::steady_clock::now();
    try {
      Verdict v = check.run(in);
      rep.status = v.status;
      rep.witness_sets = std::move(v.sets);
      rep.note = std::move(v.note);
    } catch (const BudgetExceeded& e) {
      rep.status = Status::skipped;
      rep.note = std::string("budget: ") + e.what();
    } catch (const std::out_of_range& e) {
      rep.status = Status::skipped;
      rep.note = e.what();
    }
    rep.elapsed = std::chrono::steady_clock::now() - start;
    out.push_back(std::move(rep));
  }
  return out;
}

inline CheckReport run_proposition(std::string_view id, const Graph& g, CheckOptions opts = {}) {
  return run_checks(g, {std::string(id)}, opts).front();
}

}  // namespace gdiff
