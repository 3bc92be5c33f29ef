#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "lsl/matrix.hpp"

namespace lsl {

struct AmbientMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

// Unique reduced row-echelon form; zero rows are kept at the bottom.
RowEchelon rref(const Matrix& m);

// Subspace of Q^n stored by its RREF basis, so equality is structural.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient);

  static Subspace zero(std::size_t ambient) { return Subspace(ambient); }
  static Subspace full(std::size_t ambient);
  static Subspace span(std::size_t ambient, const std::vector<Vector>& rows);
  static Subspace row_space(const Matrix& m);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Vector> vectors() const { return basis_.row_vectors(); }

  // v minus its projection along pivot columns; zero iff v lies in the span.
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  // Coordinates of v in the RREF basis; v must lie in the span.
  Vector coordinates(const Vector& v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

// {v : v * m = 0}, a subspace of Q^{m.rows()}.
Subspace kernel(const Matrix& m);
// Row space of m, a subspace of Q^{m.cols()}.
Subspace image(const Matrix& m);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

// Image of a subspace under right multiplication by m.
Subspace apply(const Subspace& s, const Matrix& m);
// {v : v * m in target}.
Subspace preimage(const Matrix& m, const Subspace& target);

// Vectors of outer extending a basis of inner to outer. Candidates are scanned
// in order: preferred, then outer's RREF rows, then standard basis vectors
// lying in outer; each is kept when it raises the rank.
std::vector<Vector> complement_in(const Subspace& inner, const Subspace& outer,
                                  const std::vector<Vector>& preferred = {});

// True iff the vectors are linearly independent.
bool independent(const std::vector<Vector>& vs, std::size_t ambient);

// a ∩ (b + c) == a∩b + a∩c.
bool distributes(const Subspace& a, const Subspace& b, const Subspace& c);

}  // namespace lsl
