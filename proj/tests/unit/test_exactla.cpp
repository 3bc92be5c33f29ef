#include <gtest/gtest.h>

#include "lsl/linalg.hpp"
#include "test_support.hpp"

namespace lsl {
namespace {

using testing::kMatrixIterations;
using testing::random_matrix;
using testing::random_subspace;

// Fraction-free elimination over the integers; independent of rref.
std::size_t bareiss_rank(const Matrix& m) {
  std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& x = m(r, c);
      if (x.get_den() != 1) throw std::invalid_argument("integer matrix expected");
      a[r][c] = x.get_num();
    }
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < m.rows() && a[piv][col] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      for (std::size_t c = col + 1; c < m.cols(); ++c) {
        a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]);
        mpz_divexact(a[r][c].get_mpz_t(), a[r][c].get_mpz_t(), prev.get_mpz_t());
      }
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

// Zassenhaus: row reduce [A A; B 0]; rows with zero left half give A ∩ B.
Subspace zassenhaus(const Subspace& a, const Subspace& b) {
  const std::size_t n = a.ambient_dim();
  Matrix big(a.dim() + b.dim(), 2 * n);
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < n; ++c) big(r, c) = big(r, n + c) = a.basis()(r, c);
  for (std::size_t r = 0; r < b.dim(); ++r)
    for (std::size_t c = 0; c < n; ++c) big(a.dim() + r, c) = b.basis()(r, c);
  const auto ech = rref(big);
  std::vector<Vector> out;
  for (std::size_t r = 0; r < ech.rank; ++r) {
    bool left_zero = true;
    for (std::size_t c = 0; c < n; ++c) left_zero = left_zero && sgn(ech.reduced(r, c)) == 0;
    if (!left_zero) continue;
    Vector v(n);
    for (std::size_t c = 0; c < n; ++c) v[c] = ech.reduced(r, n + c);
    out.push_back(v);
  }
  return Subspace::span(n, out);
}

TEST(Rational, CanonicalStrings) {
  EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(to_string(parse_rational("4/2")), "2");
  EXPECT_EQ(to_string(parse_rational("-0/5")), "0");
  EXPECT_EQ(to_string(parse_rational("007")), "7");
}

TEST(Rational, RejectsMalformed) {
  for (const char* bad : {"", "1/0", "1.5", "a", "1/", "/2", "--1", "1 /2", "+", "6/-4"})
    EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
}

TEST(Rref, RankMatchesBareiss) {
  Rng rng(1);
  for (int k = 0; k < kMatrixIterations; ++k) {
    const auto rows = static_cast<std::size_t>(rng.uniform(1, 7));
    const auto cols = static_cast<std::size_t>(rng.uniform(1, 7));
    const Matrix m = random_matrix(rng, rows, cols, 5, static_cast<int>(rng.uniform(0, 3)));
    EXPECT_EQ(rref(m).rank, bareiss_rank(m));
  }
}

TEST(Rref, IsReducedEchelon) {
  Rng rng(2);
  for (int k = 0; k < kMatrixIterations; ++k) {
    const Matrix m = random_matrix(rng, 5, 6, 5, 2);
    const auto e = rref(m);
    for (std::size_t r = 0; r < e.rank; ++r) {
      const std::size_t p = e.pivots[r];
      EXPECT_EQ(e.reduced(r, p), 1);
      for (std::size_t q = 0; q < e.reduced.rows(); ++q)
        if (q != r) EXPECT_EQ(e.reduced(q, p), 0);
      for (std::size_t c = 0; c < p; ++c) EXPECT_EQ(e.reduced(r, c), 0);
      if (r > 0) EXPECT_LT(e.pivots[r - 1], p);
    }
    for (std::size_t r = e.rank; r < e.reduced.rows(); ++r) EXPECT_TRUE(is_zero(e.reduced.row(r)));
  }
}

TEST(Kernel, AnnihilatesAndHasComplementaryDimension) {
  Rng rng(3);
  for (int k = 0; k < kMatrixIterations; ++k) {
    const Matrix m = random_matrix(rng, 6, 4, 3, 2);
    const Subspace ker = kernel(m);
    EXPECT_EQ(ker.dim() + bareiss_rank(m), m.rows());
    for (const auto& v : ker.vectors()) EXPECT_TRUE(is_zero(v * m));
  }
}

TEST(Subspace, SpanIsCanonical) {
  Rng rng(4);
  for (int k = 0; k < kMatrixIterations; ++k) {
    const Subspace s = random_subspace(rng, 5, 3, 1);
    std::vector<Vector> mixed;
    for (std::size_t a = 0; a < s.dim(); ++a) {
      Vector v(5);
      for (std::size_t b = 0; b < s.dim(); ++b)
        for (std::size_t c = 0; c < 5; ++c) v[c] += Rational(static_cast<long>(a == b ? 3 : b + 1)) * s.basis()(b, c);
      mixed.push_back(v);
    }
    mixed.push_back(Vector(5));
    EXPECT_EQ(Subspace::span(5, mixed), s);
  }
}

TEST(Intersect, MatchesZassenhaus) {
  Rng rng(5);
  for (int k = 0; k < kMatrixIterations; ++k) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 6));
    const Subspace a = random_subspace(rng, n, static_cast<std::size_t>(rng.uniform(0, 5)), 1);
    const Subspace b = random_subspace(rng, n, static_cast<std::size_t>(rng.uniform(0, 5)), 1);
    const Subspace i = intersect(a, b);
    EXPECT_EQ(i, zassenhaus(a, b));
    EXPECT_EQ(i.dim() + sum(a, b).dim(), a.dim() + b.dim());
    EXPECT_TRUE(a.contains(i) && b.contains(i));
  }
}

TEST(Preimage, MembershipAndDimension) {
  Rng rng(6);
  for (int k = 0; k < kMatrixIterations; ++k) {
    const Matrix m = random_matrix(rng, 5, 4, 3, 2);
    const Subspace t = random_subspace(rng, 4, static_cast<std::size_t>(rng.uniform(0, 4)), 1);
    const Subspace p = preimage(m, t);
    for (const auto& v : p.vectors()) EXPECT_TRUE(t.contains(v * m));
    EXPECT_EQ(p.dim(), kernel(m).dim() + intersect(image(m), t).dim());
    EXPECT_TRUE(t.contains(apply(p, m)));
  }
}

TEST(Apply, ImageOfSpan) {
  Rng rng(7);
  for (int k = 0; k < kMatrixIterations; ++k) {
    const Matrix m = random_matrix(rng, 4, 5, 3, 1);
    const Subspace s = random_subspace(rng, 4, 2);
    std::vector<Vector> imgs;
    for (const auto& v : s.vectors()) imgs.push_back(v * m);
    EXPECT_EQ(apply(s, m), Subspace::span(5, imgs));
  }
}

TEST(ComplementIn, DirectSumAndPreference) {
  Rng rng(8);
  for (int k = 0; k < kMatrixIterations; ++k) {
    const Subspace outer = random_subspace(rng, 6, 4, 1);
    const Subspace inner = Subspace::span(6, {outer.dim() > 0 ? outer.basis().row(0) : Vector(6)});
    const Vector pref = outer.dim() > 1 ? outer.basis().row(1) : Vector(6);
    const auto comp = complement_in(inner, outer, {pref});
    EXPECT_TRUE(independent(comp, 6));
    EXPECT_EQ(comp.size() + inner.dim(), outer.dim());
    auto all = inner.vectors();
    all.insert(all.end(), comp.begin(), comp.end());
    EXPECT_EQ(Subspace::span(6, all), outer);
    if (outer.dim() > 1) {
      ASSERT_FALSE(comp.empty());
      EXPECT_EQ(comp.front(), pref);
    }
  }
}

TEST(ComplementIn, RejectsNonNested) {
  const Subspace a = Subspace::span(2, {{1, 0}});
  const Subspace b = Subspace::span(2, {{0, 1}});
  EXPECT_THROW(complement_in(a, b), std::invalid_argument);
}

TEST(Distributes, ThreeLinesInAPlaneFail) {
  const Subspace x = Subspace::span(2, {{1, 0}});
  const Subspace y = Subspace::span(2, {{0, 1}});
  const Subspace z = Subspace::span(2, {{1, 1}});
  EXPECT_FALSE(distributes(x, y, z));
  EXPECT_TRUE(distributes(x, y, Subspace::span(2, {{0, 2}})));
}

TEST(Distributes, HoldsWhenOneContainsAnother) {
  Rng rng(9);
  for (int k = 0; k < kMatrixIterations; ++k) {
    const Subspace a = random_subspace(rng, 5, 3, 1);
    const Subspace b = random_subspace(rng, 5, 2, 1);
    const Subspace c = sum(a, random_subspace(rng, 5, 1));
    EXPECT_TRUE(distributes(a, b, c));  // a ⊆ c
    EXPECT_TRUE(distributes(a, b, a));
  }
}

TEST(Mismatch, AmbientChecked) {
  EXPECT_THROW(sum(Subspace::full(2), Subspace::full(3)), AmbientMismatch);
  EXPECT_THROW(intersect(Subspace::full(2), Subspace::full(3)), AmbientMismatch);
}

}  // namespace
}  // namespace lsl
