#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>

#include "lsl/chain_model.hpp"
#include "lsl/series.hpp"
#include "test_support.hpp"

namespace lsl {
namespace {

using testing::kMatrixIterations;

// V spanned by pushes of (1,1,1) from (1,0,0) on the degree-one chain.
Instance worked() {
  const Skeleton s = chain_skeleton(ChainCurve{1});
  SimpleCertificate cert{{{1, 0, 0}}, {{{1, 0}}}};
  return instance_from_sections(s, 0, cert);
}

TEST(Worked, ValidExactAndCodims) {
  const Instance inst = worked();
  EXPECT_EQ(inst.v({0, 1, 0}), Subspace::span(2, {{0, 1}}));  // (0, s, 1)
  EXPECT_TRUE(validate(inst).ok());
  const auto ex = exactness(inst);
  EXPECT_TRUE(ex.exact);
  const auto g = codim_report(inst, ex);
  std::vector<long> codims;
  for (const auto& c : g.cells) codims.push_back(c.codim);
  EXPECT_EQ(codims, (std::vector<long>{1, 0, 0}));
  EXPECT_EQ(g.codim_sum, 1);
  EXPECT_TRUE(g.all_distributive);
  EXPECT_EQ(g.inequality_holds, true);
  EXPECT_EQ(g.equivalence_holds, true);
}

TEST(Validate, DetectsLinkingFailureWithWitness) {
  Instance inst = worked();
  // Replace V at (0,1,0) by the constants; the image (0,s,1) now leaves it.
  inst.V[inst.skeleton.index({0, 1, 0})] = Subspace::span(2, {{1, 0}});
  const auto rep = validate(inst);
  EXPECT_TRUE(rep.dims_ok);
  EXPECT_FALSE(rep.linking_ok);
  // The witness is a vector of V at the source whose image leaves V at the target.
  const auto it = std::find_if(rep.violations.begin(), rep.violations.end(),
                               [](const auto& v) { return v.edge && v.edge->to == Multidegree{0, 1, 0}; });
  ASSERT_NE(it, rep.violations.end());
  const auto& v = *it;
  EXPECT_TRUE(inst.v(v.edge->from).contains(v.witness));
  EXPECT_FALSE(inst.v(v.edge->to).contains(v.witness * inst.skeleton.map(*v.edge)));
}

TEST(Validate, DetectsDimension) {
  Instance inst = worked();
  inst.V[0] = Subspace::full(2);
  const auto rep = validate(inst);
  EXPECT_FALSE(rep.dims_ok);
  EXPECT_EQ(rep.violations.front().kind, "dimension");
}

TEST(Validate, DetectsBrokenSkeleton) {
  Instance inst = worked();
  auto& m = *inst.skeleton.maps[0][static_cast<std::size_t>(Direction::TowardX1)];
  m(1, 1) = 1;
  EXPECT_FALSE(validate(inst).laws_ok);
}

TEST(Exactness, WitnessSeparatesImageFromConstraint) {
  const auto corpus = testing::simple_corpus(3, 2, 900);
  int failures = 0;
  for (const auto& entry : corpus) {
    EXPECT_TRUE(exactness(entry.gen.instance).exact);
    try {
      const Instance bad = degrade(entry.gen.instance, DegradeMode::BreakExactness, 1).instance;
      for (const auto& e : exactness(bad).edges) {
        if (e.exact) continue;
        ++failures;
        EXPECT_TRUE(e.image.contains(e.witness) != e.constraint.contains(e.witness));
      }
    } catch (const DegradeUnavailable&) {
    }
  }
  EXPECT_GT(failures, 0);
}

// Distributivity of (A, B, C) is equivalent to inclusion-exclusion for the
// dimension of A + B + C, which is symmetric in the three.
TEST(Distributivity, SymmetricAndMatchesInclusionExclusion) {
  Rng rng(31);
  int nondistributive = 0;
  for (int k = 0; k < kMatrixIterations; ++k) {
    const auto n = static_cast<std::size_t>(rng.uniform(2, 4));
    LocalSums s;
    for (auto& v : s.van) v = testing::random_subspace(rng, n, static_cast<std::size_t>(rng.uniform(0, 2)), 1);
    s.s12 = sum(s.van[0], s.van[1]);
    s.s13 = sum(s.van[0], s.van[2]);
    s.s23 = sum(s.van[1], s.van[2]);
    s.s123 = sum(s.s12, s.van[2]);
    s.i12 = intersect(s.van[0], s.van[1]);
    s.i13 = intersect(s.van[0], s.van[2]);
    s.i23 = intersect(s.van[1], s.van[2]);
    const auto chk = distributivity_of(s);
    EXPECT_TRUE(chk.symmetric());
    const long lhs = static_cast<long>(s.s123.dim());
    const long rhs = static_cast<long>(s.van[0].dim() + s.van[1].dim() + s.van[2].dim()) -
                     static_cast<long>(s.i12.dim() + s.i13.dim() + s.i23.dim()) +
                     static_cast<long>(intersect(s.i12, s.van[2]).dim());
    EXPECT_EQ(chk.holds, lhs == rhs);
    if (!chk.holds) ++nondistributive;
  }
  EXPECT_GT(nondistributive, 0);
}

TEST(Report, InequalityFieldsOnlyForExact) {
  Instance inst = worked();
  inst.V[inst.skeleton.index({0, 0, 1})] = Subspace::span(2, {{1, 0}});
  const auto g = codim_report(inst);
  EXPECT_FALSE(g.exact);
  EXPECT_FALSE(g.inequality_holds.has_value());
  EXPECT_FALSE(g.equivalence_holds.has_value());
}

TEST(Report, IndependentOfThreadCount) {
  const auto corpus = testing::simple_corpus(4, 1, 321);
  for (const auto& entry : corpus) {
    setenv("LSL_THREADS", "1", 1);
    const auto a = exactness(entry.gen.instance);
    const auto ga = codim_report(entry.gen.instance, a);
    setenv("LSL_THREADS", "5", 1);
    const auto b = exactness(entry.gen.instance);
    const auto gb = codim_report(entry.gen.instance, b);
    unsetenv("LSL_THREADS");
    ASSERT_EQ(a.edges.size(), b.edges.size());
    for (std::size_t k = 0; k < a.edges.size(); ++k) {
      EXPECT_EQ(a.edges[k].edge, b.edges[k].edge);
      EXPECT_EQ(a.edges[k].image, b.edges[k].image);
    }
    for (std::size_t k = 0; k < ga.cells.size(); ++k) EXPECT_EQ(ga.cells[k].codim, gb.cells[k].codim);
  }
}

TEST(Degenerate, DegreeZeroAndRankZero) {
  const Skeleton s = chain_skeleton(ChainCurve{0});
  const Instance inst = instance_from_sections(s, 0, SimpleCertificate{{{0, 0, 0}}, {{{1}}}});
  EXPECT_TRUE(validate(inst).ok());
  EXPECT_TRUE(exactness(inst).exact);
  EXPECT_TRUE(exactness(inst).edges.empty());
  EXPECT_EQ(codim_report(inst).codim_sum, 1);
}

}  // namespace
}  // namespace lsl
