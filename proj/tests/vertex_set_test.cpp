#include <random>
#include <set>

#include <gtest/gtest.h>

#include "gdiff/vertex_set.hpp"

namespace gdiff {
namespace {

TEST(VertexSetTest, BasicMembership) {
  VertexSet s{0, 3, 63};
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(4));
  EXPECT_FALSE(s.contains(-1));
  EXPECT_FALSE(s.contains(64));
  EXPECT_EQ(s.front(), 0);
  EXPECT_EQ(s.back_or_none(), 63);
  EXPECT_EQ(s.to_vector(), (std::vector<Vertex>{0, 3, 63}));
  EXPECT_EQ(s.to_string(), "{0,3,63}");
  EXPECT_EQ(VertexSet{}.back_or_none(), -1);
  EXPECT_THROW(s.insert(64), std::out_of_range);
  EXPECT_THROW(VertexSet{}.front(), std::logic_error);
}

TEST(VertexSetTest, RangeAndComplement) {
  EXPECT_EQ(VertexSet::range(0), VertexSet{});
  EXPECT_EQ(VertexSet::range(64).size(), 64);
  EXPECT_EQ(VertexSet({1, 2}).complement(4), VertexSet({0, 3}));
  EXPECT_THROW(VertexSet::range(65), std::out_of_range);
}

TEST(VertexSetTest, ShortlexOrder) {
  EXPECT_LT(VertexSet({5}), VertexSet({0, 1}));
  EXPECT_LT(VertexSet({0, 5}), VertexSet({1, 2}));
  EXPECT_LT(VertexSet({1, 4}), VertexSet({1, 5}));
  EXPECT_LT(VertexSet{}, VertexSet({0}));
  EXPECT_EQ(VertexSet({2, 3}) <=> VertexSet({3, 2}), std::strong_ordering::equal);
}

// Set algebra agrees with std::set on random operands, and shortlex agrees
// with comparing (size, sorted members).
TEST(VertexSetTest, AlgebraMatchesStdSet) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const VertexSet a = VertexSet::from_bits(rng());
    const VertexSet b = VertexSet::from_bits(rng() & rng());
    const auto as = a.to_vector();
    const auto bs = b.to_vector();
    std::set<Vertex> u(as.begin(), as.end());
    u.insert(bs.begin(), bs.end());
    EXPECT_EQ((a | b).to_vector(), std::vector<Vertex>(u.begin(), u.end()));
    std::vector<Vertex> inter;
    std::set_intersection(as.begin(), as.end(), bs.begin(), bs.end(), std::back_inserter(inter));
    EXPECT_EQ((a & b).to_vector(), inter);
    std::vector<Vertex> diff;
    std::set_difference(as.begin(), as.end(), bs.begin(), bs.end(), std::back_inserter(diff));
    EXPECT_EQ((a - b).to_vector(), diff);
    EXPECT_EQ((a - b) | (a & b), a);
    EXPECT_EQ(a.is_subset_of(b), (a - b).empty());

    const bool shortlex_less = as.size() != bs.size() ? as.size() < bs.size() : as < bs;
    EXPECT_EQ(a < b, shortlex_less);
  }
}

}  // namespace
}  // namespace gdiff
