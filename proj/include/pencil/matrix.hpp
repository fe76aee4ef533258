#pragma once

#include <cstddef>
#include <vector>

#include "pencil/field.hpp"

namespace pencil {

/// Dense row-major matrix over a single field. Zero-dimensional shapes
/// (0 x c, r x 0) are first-class values.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);  // zero matrix
  static Matrix identity(Field field, std::size_t n);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& value);

  std::vector<Scalar> row(std::size_t r) const;
  void set_row(std::size_t r, const std::vector<Scalar>& values);

  Matrix transposed() const;
  bool is_zero() const;

  bool operator==(const Matrix& rhs) const;
  bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }

  friend struct MatrixAlgorithms;  // internal raw-storage access

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::variant<std::vector<std::uint64_t>, std::vector<mpq_class>> data_;
};

struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // strictly increasing; size == rank
};

/// Reduced row-echelon form, Gauss-Jordan with first-nonzero pivoting.
Echelon rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Canonical (reduced-echelon, no zero rows) basis of the null space,
/// one basis vector per row. Shape: (cols - rank) x cols.
Matrix kernel_rows(const Matrix& m);

Matrix matmul(const Matrix& lhs, const Matrix& rhs);
std::vector<Scalar> matvec(const Matrix& m, const std::vector<Scalar>& v);

Matrix vstack(const Matrix& top, const Matrix& bottom);
Matrix hstack(const Matrix& left, const Matrix& right);
Matrix block_diag(const Matrix& upper_left, const Matrix& lower_right);

bool is_invertible(const Matrix& m);

std::vector<Scalar> zero_vector(Field field, std::size_t size);

}  // namespace pencil
