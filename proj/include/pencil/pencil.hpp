#pragma once

#include "pencil/projective.hpp"

namespace pencil {

struct DimVec {
  std::size_t a = 0;  // source dimension
  std::size_t b = 0;  // target dimension
  bool operator==(const DimVec&) const = default;
  std::string to_string() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
};

/// An n-tuple of b x a matrices over one field, i.e. n linear maps k^a -> k^b.
/// Equivalently a module over the n-Kronecker quiver, presented in coordinates.
class Pencil {
 public:
  /// Zero maps of the given shape; map_count >= 1.
  Pencil(Field field, std::size_t map_count, std::size_t source_dim, std::size_t target_dim);

  /// From explicit matrices (at least one; equal shapes and fields).
  explicit Pencil(std::vector<Matrix> maps);

  /// The simple modules: vertex 1 has shape (1,0), vertex 2 has shape (0,1).
  static Pencil simple(int vertex, std::size_t map_count, Field field);

  /// The length-2 indecomposable attached to a point of P(k^n):
  /// shape (1,1) with matrices [lambda_1], ..., [lambda_n].
  static Pencil bristle(const ProjectivePoint& type);

  Field field() const { return field_; }
  std::size_t map_count() const { return maps_.size(); }
  std::size_t source_dim() const { return source_dim_; }
  std::size_t target_dim() const { return target_dim_; }
  DimVec dim() const { return {source_dim_, target_dim_}; }

  const Matrix& map(std::size_t i) const { return maps_[i]; }
  void set_map(std::size_t i, Matrix m);

  /// All maps stacked vertically: (n*b) x a.
  Matrix stacked() const;
  /// All maps side by side: b x (n*a).
  Matrix combined() const;

  /// Images alpha_i(v) for i = 1..n, as columns of a b x n matrix.
  Matrix image_columns(const std::vector<Scalar>& v) const;

  bool operator==(const Pencil& rhs) const;
  bool operator!=(const Pencil& rhs) const { return !(*this == rhs); }

 private:
  Field field_;
  std::size_t source_dim_, target_dim_;
  std::vector<Matrix> maps_;
};

/// True iff the common kernel of the maps is zero (full column rank a of the
/// stacked matrix).
bool is_reduced(const Pencil& p);

/// Blockwise direct sum; dimension vectors add.
Pencil direct_sum(const Pencil& p, const Pencil& q);

/// dim Hom(from, to) as modules: the solution space of the intertwining
/// equations to.map(i) * F1 = F2 * from.map(i).
std::size_t hom_dim(const Pencil& from, const Pencil& to);

struct ReducedDecomposition {
  std::size_t simple_count;  // multiplicity of the (1,0) simple summand
  Pencil reduced;            // shape (a - simple_count, b), reduced
  /// Invertible a x a matrix with gamma = identity witnessing
  /// p ~ simple(1)^simple_count (+) reduced: map(i) * basis has the block form.
  Matrix basis;
};

ReducedDecomposition reduced_decomposition(const Pencil& p);

/// Checks gamma * p.map(i) * beta == other.map(i) for all i; beta and gamma
/// must be square invertible (errc::invalid_witness otherwise).
bool is_equivalence_witness(const Pencil& p, const Pencil& other, const Matrix& beta,
                            const Matrix& gamma);

}  // namespace pencil
