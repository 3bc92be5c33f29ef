#include "lsl/linalg.hpp"

#include <string>
#include <utility>

namespace lsl {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b, const char* op) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw AmbientMismatch(std::string(op) + ": ambient dimensions " + std::to_string(a.ambient_dim()) +
                          " and " + std::to_string(b.ambient_dim()));
  }
}

}  // namespace

RowEchelon rref(const Matrix& m) {
  RowEchelon out{m, {}, 0};
  Matrix& a = out.reduced;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
    std::size_t p = lead;
    while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != lead)
      for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(p, k), a(lead, k));
    const Rational inv = 1 / a(lead, c);
    for (std::size_t k = c; k < a.cols(); ++k) a(lead, k) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || sgn(a(r, c)) == 0) continue;
      const Rational f = a(r, c);
      for (std::size_t k = c; k < a.cols(); ++k) a(r, k) -= f * a(lead, k);
    }
    out.pivots.push_back(c);
    ++lead;
  }
  out.rank = lead;
  return out;
}

Subspace::Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s(ambient);
  s.basis_ = Matrix::identity(ambient);
  for (std::size_t k = 0; k < ambient; ++k) s.pivots_.push_back(k);
  return s;
}

Subspace Subspace::row_space(const Matrix& m) {
  RowEchelon e = rref(m);
  Subspace s(m.cols());
  s.basis_ = Matrix(e.rank, m.cols());
  for (std::size_t r = 0; r < e.rank; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) s.basis_(r, c) = e.reduced(r, c);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& rows) {
  return row_space(Matrix::from_rows(rows, ambient));
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_) throw AmbientMismatch("vector length does not match ambient dimension");
  Vector out = v;
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    const Rational f = out[pivots_[r]];
    if (sgn(f) == 0) continue;
    for (std::size_t c = 0; c < ambient_; ++c) out[c] -= f * basis_(r, c);
  }
  return out;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  require_same_ambient(*this, other, "contains");
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw std::invalid_argument("coordinates: vector not in subspace");
  Vector c(dim());
  for (std::size_t r = 0; r < dim(); ++r) c[r] = v[pivots_[r]];
  return c;
}

Subspace kernel(const Matrix& m) {
  const RowEchelon e = rref(m.transpose());
  std::vector<bool> is_pivot(m.rows(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> rows;
  for (std::size_t f = 0; f < m.rows(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.rows());
    v[f] = 1;
    for (std::size_t r = 0; r < e.rank; ++r) v[e.pivots[r]] = -e.reduced(r, f);
    rows.push_back(std::move(v));
  }
  return Subspace::span(m.rows(), rows);
}

Subspace image(const Matrix& m) { return Subspace::row_space(m); }

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "sum");
  return Subspace::row_space(vstack(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "intersect");
  // (x, y) with x*A + y*B = 0 gives x*A in both.
  const Subspace k = kernel(vstack(a.basis(), b.basis()));
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < k.dim(); ++r) {
    const Vector full = k.basis().row(r);
    const Vector x(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(a.dim()));
    rows.push_back(x * a.basis());
  }
  return Subspace::span(a.ambient_dim(), rows);
}

Subspace apply(const Subspace& s, const Matrix& m) {
  if (s.ambient_dim() != m.rows()) throw AmbientMismatch("apply: subspace and map do not match");
  return Subspace::row_space(s.basis() * m);
}

Subspace preimage(const Matrix& m, const Subspace& target) {
  if (target.ambient_dim() != m.cols()) throw AmbientMismatch("preimage: map and target do not match");
  // Columns of n cut out the target: w in target iff w * n = 0.
  const Matrix n = kernel(target.basis().transpose()).basis().transpose();
  return kernel(m * n);
}

std::vector<Vector> complement_in(const Subspace& inner, const Subspace& outer,
                                  const std::vector<Vector>& preferred) {
  require_same_ambient(inner, outer, "complement_in");
  if (!outer.contains(inner)) throw std::invalid_argument("complement_in: inner is not contained in outer");
  std::vector<Vector> picked;
  Subspace current = inner;
  auto offer = [&](const Vector& v) {
    if (current.dim() == outer.dim() || current.contains(v)) return;
    picked.push_back(v);
    current = sum(current, Subspace::span(outer.ambient_dim(), {v}));
  };
  for (const auto& v : preferred) {
    if (!outer.contains(v)) throw std::invalid_argument("complement_in: preferred vector outside outer");
    offer(v);
  }
  for (std::size_t r = 0; r < outer.dim(); ++r) offer(outer.basis().row(r));
  for (std::size_t k = 0; k < outer.ambient_dim() && current.dim() < outer.dim(); ++k) {
    Vector e(outer.ambient_dim());
    e[k] = 1;
    if (outer.contains(e)) offer(e);
  }
  return picked;
}

bool independent(const std::vector<Vector>& vs, std::size_t ambient) {
  return Subspace::span(ambient, vs).dim() == vs.size();
}

bool distributes(const Subspace& a, const Subspace& b, const Subspace& c) {
  return intersect(a, sum(b, c)) == sum(intersect(a, b), intersect(a, c));
}

}  // namespace lsl
