#include <gtest/gtest.h>

#include <set>

#include "lsl/identities.hpp"
#include "lsl/series.hpp"
#include "test_support.hpp"

namespace lsl {
namespace {

TEST(IdentitySuite, PassesOnSimpleCorpus) {
  const auto corpus = testing::simple_corpus(4, 2, 4242);
  for (const auto& entry : corpus) {
    const auto results = identity_suite(entry.gen.instance);
    for (const auto& r : results) {
      EXPECT_NE(r.outcome, Outcome::Fail) << r.name << " at " << to_string(r.at) << " d=" << entry.spec.d
                                          << " r=" << entry.spec.r << " lhs=" << r.lhs << " rhs=" << r.rhs;
      // Every hypothesis is exactness on some edge, which simple series have.
      EXPECT_NE(r.outcome, Outcome::HypothesisNotMet) << r.name;
    }
    EXPECT_TRUE(all_pass(results));
  }
}

TEST(IdentitySuite, CoversEveryFamily) {
  const auto corpus = testing::simple_corpus(3, 1, 17);
  std::set<std::string> names;
  for (const auto& entry : corpus)
    for (const auto& r : identity_suite(entry.gen.instance)) names.insert(r.name);
  for (const char* n :
       {"edge_codim.x2", "edge_codim.x1", "edge_codim.x3", "vertical_split.independent", "vertical_split.direct_sum",
        "vertical_growth", "vertical_growth.column-sum", "quotient_dims.x2x3", "quotient_dims.x1x2", "distributivity_gap.x2x3.forward",
        "distributivity_gap.x2x3.backward", "distributivity_gap.x1x2.forward", "distributivity_gap.x1x2.backward",
        "boundary.diagonal-inclusion", "boundary.nested-distributive", "boundary.top-vertex", "anulamiento.V"})
    EXPECT_TRUE(names.count(n)) << n;
}

TEST(IdentitySuite, InexactEdgesAreSkippedNotFailed) {
  const auto corpus = testing::simple_corpus(3, 2, 99);
  int skipped = 0;
  for (const auto& entry : corpus) {
    Instance bad;
    try {
      bad = degrade(entry.gen.instance, DegradeMode::BreakExactness, 3).instance;
    } catch (const DegradeUnavailable&) {
      continue;
    }
    for (const auto& r : identity_suite(bad)) {
      if (r.outcome == Outcome::HypothesisNotMet) ++skipped;
      EXPECT_NE(r.outcome, Outcome::Fail) << r.name << " at " << to_string(r.at);
    }
  }
  EXPECT_GT(skipped, 0);
}

TEST(IdentitySuite, DeterministicOrder) {
  const auto corpus = testing::simple_corpus(3, 1, 5);
  for (const auto& entry : corpus) {
    const auto a = identity_suite(entry.gen.instance);
    const auto b = identity_suite(entry.gen.instance);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      EXPECT_EQ(a[k].name, b[k].name);
      EXPECT_EQ(a[k].at, b[k].at);
    }
  }
}

TEST(Outcome, Strings) {
  EXPECT_EQ(to_string(Outcome::Pass), "pass");
  EXPECT_EQ(to_string(Outcome::Fail), "fail");
  EXPECT_EQ(to_string(Outcome::HypothesisNotMet), "hypothesis-not-met");
}

}  // namespace
}  // namespace lsl
