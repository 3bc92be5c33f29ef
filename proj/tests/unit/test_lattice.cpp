#include <gtest/gtest.h>

#include <set>

#include "lsl/lattice.hpp"

namespace lsl {
namespace {

TEST(Grid, OrderForDegreeTwo) {
  const std::vector<Multidegree> expected = {{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 2}};
  EXPECT_EQ(enumerate(2), expected);
}

TEST(Grid, IndexInvertsEnumeration) {
  for (int d = 0; d <= 7; ++d) {
    const auto grid = enumerate(d);
    ASSERT_EQ(grid.size(), grid_size(d));
    EXPECT_EQ(grid.size(), static_cast<std::size_t>((d + 1) * (d + 2) / 2));
    for (std::size_t k = 0; k < grid.size(); ++k) {
      EXPECT_EQ(grid_index(d, grid[k]), k);
      EXPECT_TRUE(grid[k].nonnegative());
      EXPECT_EQ(grid[k].total(), d);
    }
  }
}

TEST(Twist, StepVectors) {
  const Multidegree m{2, 2, 2};
  EXPECT_EQ(step(m, Direction::TowardX1), (Multidegree{1, 3, 2}));
  EXPECT_EQ(step(m, Direction::TowardX2), (Multidegree{3, 0, 3}));
  EXPECT_EQ(step(m, Direction::TowardX3), (Multidegree{2, 3, 1}));
  EXPECT_EQ(step(m, Direction::FromX1), (Multidegree{3, 1, 2}));
  EXPECT_EQ(step(m, Direction::FromX2), (Multidegree{1, 4, 1}));
  EXPECT_EQ(step(m, Direction::FromX3), (Multidegree{2, 1, 3}));
}

TEST(Twist, ReverseAndDirectionBetween) {
  for (const auto& m : enumerate(4))
    for (Direction dir : kDirections) {
      EXPECT_EQ(step(step(m, dir), reverse(dir)), m);
      EXPECT_EQ(component(dir), component(reverse(dir)));
      EXPECT_NE(is_toward(dir), is_toward(reverse(dir)));
      if (auto n = neighbor(m, dir)) EXPECT_EQ(direction_between(m, *n), dir);
    }
  EXPECT_FALSE(direction_between({2, 0, 0}, {0, 2, 0}));
  EXPECT_FALSE(neighbor({0, 1, 0}, Direction::TowardX1));
}

TEST(Neighbors, NamedOffsets) {
  const Multidegree m{1, 2, 1};
  EXPECT_EQ(diag_down(m), (Multidegree{0, 4, 0}));
  EXPECT_EQ(i_down(m), (Multidegree{0, 3, 1}));
  EXPECT_EQ(l_up(m), (Multidegree{1, 1, 2}));
  EXPECT_EQ(i_up(m), (Multidegree{2, 1, 1}));
  EXPECT_EQ(toward_neighbor(m, 1), i_down(m));
  EXPECT_FALSE(diag_down(Multidegree{0, 2, 1}));
  EXPECT_FALSE(l_up(Multidegree{1, 0, 1}));
}

TEST(Paths, PatternExamples) {
  // toward X1, X2, X3 in sequence: pattern I.
  EXPECT_EQ(classify_path({{{1, 1, 1}, {0, 2, 1}, {1, 0, 2}, {1, 1, 1}}}), PathClass::ViolatesI);
  // toward X1 then from X1: pattern II.
  EXPECT_EQ(classify_path({{{1, 1, 0}, {0, 2, 0}, {1, 1, 0}}}), PathClass::ViolatesII);
  // from X1 then from X3: pattern III.
  EXPECT_EQ(classify_path({{{0, 2, 0}, {1, 1, 0}, {1, 0, 1}}}), PathClass::ViolatesIII);
  EXPECT_EQ(classify_path({{{2, 0, 0}, {1, 1, 0}, {1, 0, 1}}}), PathClass::ValidCanonical);
  EXPECT_EQ(classify_path({{{1, 0, 0}}}), PathClass::ValidCanonical);
  EXPECT_THROW(classify_path({{{2, 0, 0}, {0, 2, 0}}}), std::invalid_argument);
}

TEST(Paths, CanonicalPathsAreValidForAllPairs) {
  for (int d = 0; d <= 6; ++d) {
    const auto grid = enumerate(d);
    for (const auto& a : grid)
      for (const auto& b : grid) {
        const Path p = canonical_path(a, b);
        ASSERT_EQ(p.nodes.front(), a);
        ASSERT_EQ(p.nodes.back(), b);
        for (const auto& n : p.nodes) ASSERT_TRUE(n.nonnegative());
        ASSERT_EQ(classify_path(p), PathClass::ValidCanonical) << to_string(a) << " -> " << to_string(b);
        // The step count equals the lattice distance when the offsets in i and l
        // have the same sign (a diagonal covers both), else their sum.
        const int di = b.i - a.i, dl = b.l - a.l;
        const int expected = (di > 0 && dl > 0) ? std::max(di, dl) : std::abs(di) + std::abs(dl);
        EXPECT_EQ(static_cast<int>(p.length()), expected);
      }
  }
}

TEST(Paths, CanonicalPathRejectsMixedDegrees) {
  EXPECT_THROW(canonical_path({1, 0, 0}, {1, 1, 0}), std::invalid_argument);
}

TEST(Regions, MRegionsCoverTheGrid) {
  for (int d = 0; d <= 6; ++d)
    for (const auto& c : enumerate(d)) {
      const auto reg = regions(c);
      std::set<Multidegree> all(reg.first.begin(), reg.first.end());
      all.insert(reg.second.begin(), reg.second.end());
      all.insert(reg.third.begin(), reg.third.end());
      EXPECT_EQ(all.size(), grid_size(d));
      for (int q = 1; q <= 3; ++q) EXPECT_TRUE(in_region_m(q, c, c));
    }
}

TEST(Regions, DefPartition) {
  // D ∪ E and F partition the grid whenever i >= 1.
  for (int d = 1; d <= 6; ++d)
    for (const auto& c : enumerate(d)) {
      if (c.i < 1) continue;
      const auto reg = def_regions(c);
      std::set<Multidegree> de(reg.first.begin(), reg.first.end());
      de.insert(reg.second.begin(), reg.second.end());
      for (const auto& f : reg.third) EXPECT_FALSE(de.count(f));
      EXPECT_EQ(de.size() + reg.third.size(), grid_size(d));
    }
}

}  // namespace
}  // namespace lsl
