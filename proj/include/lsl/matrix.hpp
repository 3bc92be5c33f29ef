#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "lsl/rational.hpp"

namespace lsl {

// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row_span(std::size_t r) const;
  Vector row(std::size_t r) const;
  std::vector<Vector> row_vectors() const;

  Matrix transpose() const;
  Matrix columns(const std::vector<std::size_t>& idx) const;
  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Vector& v, const Matrix& m);

// Stack a on top of b; column counts must match.
Matrix vstack(const Matrix& a, const Matrix& b);

}  // namespace lsl
