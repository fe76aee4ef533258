#pragma once

#include <optional>

#include "pencil/matrix.hpp"

namespace pencil {

/// Subspace of a coordinate space, held as a reduced-echelon basis with no
/// zero rows. The representation is unique, so equality of subspaces is
/// equality of basis matrices.
class Subspace {
 public:
  static Subspace zero(Field field, std::size_t ambient_dim);
  static Subspace full(Field field, std::size_t ambient_dim);

  /// Canonicalizes the row span of an arbitrary matrix.
  static Subspace row_span(const Matrix& rows);

  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  Field field() const { return basis_.field(); }

  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_dim(); }

  bool contains(const std::vector<Scalar>& v) const;
  bool contains(const Subspace& other) const;

  /// Coefficients expressing v in the echelon basis, or nullopt if v is
  /// outside the subspace.
  std::optional<std::vector<Scalar>> coordinates(const std::vector<Scalar>& v) const;

  /// The linear combination sum_i coeffs[i] * basis_row[i].
  std::vector<Scalar> combination(const std::vector<Scalar>& coeffs) const;

  bool operator==(const Subspace& rhs) const { return basis_ == rhs.basis_; }
  bool operator!=(const Subspace& rhs) const { return !(*this == rhs); }

 private:
  explicit Subspace(Matrix canonical_basis, std::vector<std::size_t> pivots)
      : basis_(std::move(canonical_basis)), pivots_(std::move(pivots)) {}

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel(const Matrix& m);
Subspace column_space(const Matrix& m);

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersection(const Subspace& u, const Subspace& v);

}  // namespace pencil
