#include "lsl/chain_model.hpp"

#include <optional>
#include <stdexcept>

namespace lsl {

namespace {

using Poly = Vector;  // coefficients, constant term first

Poly multiply(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < b.size(); ++y) out[x + y] += a[x] * b[y];
  return out;
}

// Factor applied to each component; nullopt kills the component.
using Factors = std::array<std::optional<Poly>, 3>;

Factors factors(Direction dir) {
  const Poly one{1};
  const Poly x{0, 1};
  const Poly one_minus_x{1, -1};
  const Poly x_one_minus_x{0, 1, -1};
  switch (dir) {
    case Direction::TowardX1:
      return {std::nullopt, x, one};
    case Direction::FromX1:
      return {x, std::nullopt, std::nullopt};
    case Direction::TowardX3:
      return {one, one_minus_x, std::nullopt};
    case Direction::FromX3:
      return {std::nullopt, std::nullopt, x};
    case Direction::TowardX2:
      return {x, std::nullopt, x};
    case Direction::FromX2:
      return {std::nullopt, x_one_minus_x, std::nullopt};
  }
  return {};
}

void check_multidegree(const ChainCurve& c, const Multidegree& md) {
  if (!md.nonnegative() || md.total() != c.d)
    throw std::out_of_range("multidegree " + to_string(md) + " not in the degree-" + std::to_string(c.d) + " lattice");
}

}  // namespace

Vector SectionSpace::polynomial(const Vector& raw, int q) const {
  const auto k = static_cast<std::size_t>(q - 1);
  return {raw.begin() + static_cast<std::ptrdiff_t>(offset[k]),
          raw.begin() + static_cast<std::ptrdiff_t>(offset[k] + length[k])};
}

Vector SectionSpace::raw_from(const Vector& f1, const Vector& f2, const Vector& f3) const {
  Vector raw(raw_dim());
  const std::array<const Vector*, 3> parts = {&f1, &f2, &f3};
  for (std::size_t q = 0; q < 3; ++q) {
    const Vector& f = *parts[q];
    for (std::size_t k = 0; k < f.size(); ++k) {
      if (sgn(f[k]) == 0) continue;
      if (k >= length[q]) throw std::invalid_argument("polynomial degree exceeds the multidegree");
      raw[offset[q] + k] = f[k];
    }
  }
  return raw;
}

SectionSpace h0_basis(const ChainCurve& c, const Multidegree& md) {
  check_multidegree(c, md);
  SectionSpace s;
  s.md = md;
  s.length = {static_cast<std::size_t>(md.i + 1), static_cast<std::size_t>(md.j + 1),
              static_cast<std::size_t>(md.l + 1)};
  s.offset = {0, s.length[0], s.length[0] + s.length[1]};
  const std::size_t raw = s.length[0] + s.length[1] + s.length[2];
  // Column 0: f1(0) - glue_a f2(0). Column 1: f2(1) - glue_b f3(0).
  Matrix gluing(raw, 2);
  gluing(s.offset[0], 0) = 1;
  gluing(s.offset[1], 0) = -c.glue_a;
  for (std::size_t k = 0; k < s.length[1]; ++k) gluing(s.offset[1] + k, 1) = 1;
  gluing(s.offset[2], 1) -= c.glue_b;
  s.span = kernel(gluing);
  s.basis = s.span.basis();
  return s;
}

Matrix twist_matrix(const ChainCurve& c, const Edge& e) {
  check_multidegree(c, e.from);
  check_multidegree(c, e.to);
  if (step(e.from, e.dir) != e.to) throw std::invalid_argument("edge endpoints do not match its direction");
  const SectionSpace src = h0_basis(c, e.from);
  const SectionSpace dst = h0_basis(c, e.to);
  const Factors f = factors(e.dir);
  Matrix m(src.dim(), dst.dim());
  for (std::size_t r = 0; r < src.dim(); ++r) {
    const Vector raw = src.basis.row(r);
    std::array<Vector, 3> parts;
    for (int q = 1; q <= 3; ++q) {
      const auto k = static_cast<std::size_t>(q - 1);
      if (f[k]) parts[k] = multiply(src.polynomial(raw, q), *f[k]);
    }
    const Vector coords = dst.coordinates(dst.raw_from(parts[0], parts[1], parts[2]));
    for (std::size_t k = 0; k < dst.dim(); ++k) m(r, k) = coords[k];
  }
  return m;
}

Subspace vanishing_subspace(const ChainCurve& c, const Multidegree& md, unsigned mask) {
  const SectionSpace s = h0_basis(c, md);
  std::vector<std::size_t> cols;
  for (int q = 1; q <= 3; ++q) {
    if ((mask & component_bit(q)) == 0) continue;
    const auto k = static_cast<std::size_t>(q - 1);
    for (std::size_t x = 0; x < s.length[k]; ++x) cols.push_back(s.offset[k] + x);
  }
  return kernel(s.basis.columns(cols));
}

Matrix composite_matrix(const ChainCurve& c, const Path& p) {
  if (p.nodes.empty()) throw std::invalid_argument("composite_matrix: empty path");
  Matrix m = Matrix::identity(h0_basis(c, p.nodes.front()).dim());
  const auto steps = path_steps(p);
  for (std::size_t k = 0; k < steps.size(); ++k) m = m * twist_matrix(c, {p.nodes[k], p.nodes[k + 1], steps[k]});
  return m;
}

Skeleton chain_skeleton(const ChainCurve& c) {
  Skeleton s = make_skeleton_shell(c.d);
  for (std::size_t k = 0; k < s.grid.size(); ++k) {
    const Multidegree& m = s.grid[k];
    s.ambient_dim[k] = h0_basis(c, m).dim();
    for (int q = 1; q <= 3; ++q)
      s.vanishing[k][static_cast<std::size_t>(q - 1)] = vanishing_subspace(c, m, component_bit(q));
  }
  for (const Edge& e : s.edges()) s.maps[s.index(e.from)][static_cast<std::size_t>(e.dir)] = twist_matrix(c, e);
  return s;
}

LawReport verify_sheaf_laws(const ChainCurve& c) { return check_sheaf_laws(chain_skeleton(c)); }

}  // namespace lsl
