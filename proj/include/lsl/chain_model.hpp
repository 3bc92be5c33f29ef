#pragma once

#include <array>
#include <cstddef>

#include "lsl/instance.hpp"
#include "lsl/sheaf_laws.hpp"

namespace lsl {

// Chain X1 - X2 - X3 of rational curves. Node A sits at t = 0 on X1 and s = 0
// on X2; node B at s = 1 on X2 and u = 0 on X3. Sections are triples of
// polynomials glued by f1(0) = glue_a * f2(0) and f2(1) = glue_b * f3(0).
struct ChainCurve {
  int d = 0;
  Rational glue_a = 1;
  Rational glue_b = 1;
};

// Global sections at one multidegree. Raw coordinates concatenate the
// coefficient vectors of f1 (deg <= i), f2 (deg <= j), f3 (deg <= l).
struct SectionSpace {
  Multidegree md;
  Matrix basis;  // dim x raw, RREF
  Subspace span;
  std::array<std::size_t, 3> offset{};
  std::array<std::size_t, 3> length{};

  std::size_t dim() const { return basis.rows(); }
  std::size_t raw_dim() const { return basis.cols(); }
  Vector to_raw(const Vector& coords) const { return coords * basis; }
  Vector coordinates(const Vector& raw) const { return span.coordinates(raw); }
  Vector polynomial(const Vector& raw, int q) const;
  Vector raw_from(const Vector& f1, const Vector& f2, const Vector& f3) const;
};

SectionSpace h0_basis(const ChainCurve& c, const Multidegree& md);

// Matrix of the twist map along e in h0_basis coordinates.
Matrix twist_matrix(const ChainCurve& c, const Edge& e);

// Sections whose polynomials on the components in mask vanish identically.
Subspace vanishing_subspace(const ChainCurve& c, const Multidegree& md, unsigned mask);

Matrix composite_matrix(const ChainCurve& c, const Path& p);

// All ambient dimensions, twist maps and vanishing subspaces.
Skeleton chain_skeleton(const ChainCurve& c);

LawReport verify_sheaf_laws(const ChainCurve& c);

}  // namespace lsl
