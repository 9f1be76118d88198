#include <bit>
#include <random>

#include <gtest/gtest.h>

#include "gdiff/canonical.hpp"
#include "gdiff/families.hpp"
#include "gdiff/solvers.hpp"
#include "test_support.hpp"

namespace gdiff {
namespace {

Graph K(int n) { return generate(FamilySpec::complete(n)); }
Graph Kpq(int p, int q) { return generate(FamilySpec::complete_bipartite(p, q)); }
Graph Kprime(int r) { return generate(FamilySpec::kprime(r)); }
Graph P(int n) { return generate(FamilySpec::path(n)); }
Graph C(int n) { return generate(FamilySpec::cycle(n)); }
Graph W(int n) { return generate(FamilySpec::wheel(n)); }

int diff(const Graph& g) { return differential_exact(g).value; }
int diff_r(const Graph& g) { return differential_of_r(build_r(g)).value; }

TEST(DifferentialTest, KnownValues) {
  EXPECT_EQ(diff(K(5)), 3);
  EXPECT_EQ(diff(Kpq(1, 4)), 3);
  EXPECT_EQ(diff(P(7)), 2);
  EXPECT_EQ(diff(Graph(1)), 0);
  EXPECT_EQ(diff(generate(FamilySpec::empty(4))), 0);
}

TEST(DifferentialTest, PathSevenEnumeration) {
  const auto r = differential_exact(P(7), std::nullopt, {true});
  EXPECT_EQ(r.value, 2);
  EXPECT_EQ(r.witness, VertexSet({1, 4}));
  EXPECT_EQ(r.all_sets, (std::vector<VertexSet>{{1, 4}, {1, 5}, {2, 5}}));
  EXPECT_EQ(r.min_card, 2);
  EXPECT_EQ(r.max_card, 2);
}

TEST(DifferentialTest, OfR) {
  EXPECT_EQ(diff_r(K(4)), 5);
  EXPECT_EQ(diff_r(W(5)), 7);
  EXPECT_EQ(diff_r(Kpq(2, 3)), 7);
  EXPECT_EQ(diff_r(K(3)), 3);
  EXPECT_EQ(diff_r(Kpq(2, 4)), 10);
  EXPECT_EQ(diff_r(Kprime(2)), 10);
  EXPECT_EQ(diff_r(P(7)), 7);
}

TEST(DifferentialTest, VRestrictionPreconditions) {
  EXPECT_THROW(differential_of_r(build_r(P(2))), std::invalid_argument);
  EXPECT_THROW(differential_of_r(build_r(testing::disjoint_union(K(3), K(3)))), std::invalid_argument);
  EXPECT_EQ(differential_of_r(build_r(P(2)), RSearchMode::full).value, 1);
}

TEST(DifferentialTest, Errors) {
  EXPECT_THROW(differential_exact(Graph()), std::invalid_argument);
  EXPECT_THROW(differential_exact(K(3), VertexSet({5})), std::out_of_range);
  EXPECT_THROW(differential_exact(generate(FamilySpec::empty(30)), std::nullopt, {false, 1000}), BudgetExceeded);
}

TEST(DominationTest, KnownValues) {
  EXPECT_EQ(domination_number(Kpq(1, 4)).gamma, 1);
  EXPECT_EQ(domination_number(C(6)).gamma, 2);
  EXPECT_EQ(domination_number(build_r(Kprime(2)).total).gamma, 4);
  EXPECT_EQ(domination_number(generate(FamilySpec::empty(3))).gamma, 3);
  EXPECT_EQ(domination_number(P(7)).gamma, 3);
  EXPECT_THROW(domination_number(Graph()), std::invalid_argument);
}

TEST(DominationTest, EnumeratesAllMinimumSets) {
  const auto r = domination_number(C(4), true);
  EXPECT_EQ(r.gamma, 2);
  EXPECT_EQ(r.all_min, (std::vector<VertexSet>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(r.witness, VertexSet({0, 1}));
}

TEST(CoverIndependenceTest, KnownValues) {
  EXPECT_EQ(vertex_cover_number(K(5)).value, 4);
  EXPECT_EQ(vertex_cover_number(C(5)).value, 3);
  EXPECT_EQ(vertex_cover_number(Kpq(2, 4)).value, 2);
  EXPECT_EQ(vertex_cover_number(generate(FamilySpec::empty(3))).value, 0);
  EXPECT_EQ(independence_number(K(5)).value, 1);
  EXPECT_EQ(independence_number(C(5)).value, 2);
  EXPECT_EQ(independence_number(Kpq(2, 4)).value, 4);
  EXPECT_EQ(independence_number(Kprime(2)).value, 2);
  EXPECT_EQ(independence_number(P(7)).witness, VertexSet({0, 2, 4, 6}));
}

TEST(RomanTest, KnownValues) {
  for (int n = 2; n <= 7; ++n) EXPECT_EQ(roman_domination_number(K(n)).weight, 2);
  EXPECT_EQ(roman_domination_number(C(5)).weight, 4);
  EXPECT_EQ(roman_domination_number(P(7)).weight, 5);
  EXPECT_EQ(roman_domination_number(Graph(1)).weight, 1);
  const auto r = roman_domination_number(C(5));
  EXPECT_TRUE(is_roman_dominating(C(5), r.labels));
  EXPECT_FALSE(is_roman_dominating(C(5), {0, 0, 0, 0, 2}));
  EXPECT_THROW(roman_domination_number(K(20), 1000), BudgetExceeded);
}

TEST(EnclavelessTest, KnownValues) {
  EXPECT_EQ(enclaveless_number(K(3)).value, 2);
  EXPECT_EQ(enclaveless_number(P(4)).value, 2);
  EXPECT_EQ(enclaveless_number(Kpq(1, 4)).value, 4);
}

TEST(LambdaMuTest, KnownValues) {
  EXPECT_EQ(lambda_invariant(Kpq(2, 4)), 10);
  EXPECT_EQ(lambda_invariant(Kprime(2)), 8);
  EXPECT_EQ(lambda_invariant(P(7)), 7);
  const auto k24 = mu_invariant(Kpq(2, 4));
  EXPECT_EQ(k24.value, 2);
  EXPECT_EQ(k24.witness, VertexSet({0, 1}));
  EXPECT_EQ(mu_invariant(Kprime(2)).value, 2);
  EXPECT_EQ(mu_invariant(K(3)).value, 1);
  EXPECT_EQ(mu_invariant(K(4)).value, 2);
}

TEST(RecordTest, CompleteGraphOnFour) {
  const InvariantRecord r = full_record(K(4));
  EXPECT_EQ(r.n, 4);
  EXPECT_EQ(r.m, 6);
  EXPECT_EQ(r.diff.value, 2);
  EXPECT_EQ(r.diff_r.value, 5);
  EXPECT_EQ(r.gamma.value, 1);
  EXPECT_EQ(r.gamma_r.value, 3);
  EXPECT_EQ(r.tau.value, 3);
  EXPECT_EQ(r.alpha.value, 1);
  EXPECT_EQ(r.roman.value, 2);
  EXPECT_EQ(r.psi.value, 3);
  EXPECT_EQ(r.lambda.value, 4);
  EXPECT_EQ(r.mu.value, 2);
  EXPECT_EQ(r.delta_min.value, 3);
  EXPECT_EQ(r.delta_max.value, 3);
}

TEST(RecordTest, OtherFamilies) {
  const InvariantRecord k23 = full_record(Kpq(2, 3));
  EXPECT_EQ(k23.diff_r.value, 7);
  EXPECT_EQ(k23.tau.value, 2);
  EXPECT_EQ(k23.alpha.value, 3);
  EXPECT_EQ(k23.lambda.value, 7);
  const InvariantRecord p7 = full_record(P(7));
  EXPECT_EQ(p7.diff.value, 2);
  EXPECT_EQ(p7.roman.value, 5);
  EXPECT_EQ(p7.diff_r.value, 7);
  EXPECT_EQ(p7.lambda.value, 7);
}

TEST(RecordTest, SkipsInsteadOfFailing) {
  const InvariantRecord big = full_record(K(11), 1000);
  EXPECT_FALSE(big.diff_r.value.has_value());
  EXPECT_FALSE(big.roman.value.has_value());
  EXPECT_FALSE(big.roman.skipped.empty());
  EXPECT_EQ(big.delta_min.value, 10);
  const InvariantRecord none = full_record(Graph());
  EXPECT_FALSE(none.diff.value.has_value());
  EXPECT_FALSE(none.delta_min.value.has_value());
  const InvariantRecord small = full_record(P(2));
  EXPECT_FALSE(small.diff_r.value.has_value());
  EXPECT_EQ(small.diff.value, 0);
}

// The pruned solver agrees with the unpruned scan and every reported set
// attains the reported value.
TEST(DifferentialProperty, AgreesWithNaiveScan) {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 500; ++t) {
    const Graph g = testing::random_connected(rng, 1, 6);
    const auto naive = testing::naive_differential(g);
    const auto r = differential_exact(g, std::nullopt, {true});
    ASSERT_EQ(r.value, naive.value);
    ASSERT_EQ(r.all_sets.size(), naive.maximizers.size());
    for (VertexSet s : r.all_sets) EXPECT_EQ(set_differential(g, s), r.value);
    EXPECT_TRUE(std::is_sorted(r.all_sets.begin(), r.all_sets.end()));
    EXPECT_EQ(r.witness, r.all_sets.front());
  }
}

TEST(DifferentialProperty, VRestrictionIsSound) {
  std::mt19937_64 rng(202);
  int checked = 0;
  while (checked < 150) {
    const Graph g = testing::random_connected(rng, 3, 7);
    if (g.order() + g.size() > 18) continue;
    ++checked;
    const RGraph rg = build_r(g);
    const auto full = differential_of_r(rg, RSearchMode::full);
    const auto restricted = differential_of_r(rg, RSearchMode::v_restricted);
    EXPECT_EQ(full.value, restricted.value) << "n=" << g.order() << " m=" << g.size();
    EXPECT_TRUE(restricted.witness.is_subset_of(rg.v_part));
  }
}

TEST(DifferentialProperty, RomanIdentity) {
  std::mt19937_64 rng(303);
  for (int t = 0; t < 200; ++t) {
    const Graph g = testing::random_graph(rng, 1 + static_cast<int>(rng() % 8));
    EXPECT_EQ(diff(g) + roman_domination_number(g).weight, g.order());
  }
}

TEST(DifferentialProperty, ComponentAdditivity) {
  std::mt19937_64 rng(404);
  for (int t = 0; t < 100; ++t) {
    const Graph a = testing::random_graph(rng, 1 + static_cast<int>(rng() % 5));
    const Graph b = testing::random_graph(rng, 1 + static_cast<int>(rng() % 5));
    EXPECT_EQ(diff(testing::disjoint_union(a, b)), diff(a) + diff(b));
  }
}

TEST(SolverProperty, ClassicalRelations) {
  std::mt19937_64 rng(505);
  for (int t = 0; t < 300; ++t) {
    const Graph g = testing::random_graph(rng, 1 + static_cast<int>(rng() % 10));
    const auto dom = domination_number(g);
    const auto tau = vertex_cover_number(g);
    const auto alpha = independence_number(g);
    const auto psi = enclaveless_number(g);
    EXPECT_EQ(tau.value + alpha.value, g.order());
    EXPECT_GE(psi.value, g.order() - dom.gamma);
    EXPECT_EQ(dom.gamma, testing::naive_domination(g));
    EXPECT_TRUE(is_dominating(g, dom.witness));
    EXPECT_EQ(dom.witness.size(), dom.gamma);
    EXPECT_TRUE(is_vertex_cover(g, tau.witness));
    EXPECT_EQ(tau.witness.size(), tau.value);
    EXPECT_TRUE(is_independent(g, alpha.witness));
    EXPECT_TRUE(is_vertex_cover(g, g.vertices() - alpha.witness));
    EXPECT_EQ(boundary(g, psi.witness).size(), psi.value);
  }
}

TEST(SolverProperty, InvariantUnderRelabeling) {
  std::mt19937_64 rng(606);
  for (int t = 0; t < 100; ++t) {
    const Graph g = testing::random_connected(rng, 3, 7);
    const Graph h = testing::relabel(g, testing::random_permutation(rng, g.order()));
    const InvariantRecord a = full_record(g);
    const InvariantRecord b = full_record(h);
    const auto fa = a.fields();
    const auto fb = b.fields();
    for (std::size_t i = 0; i < fa.size(); ++i) EXPECT_EQ(*fa[i].second, *fb[i].second) << fa[i].first;
  }
}

}  // namespace
}  // namespace gdiff
