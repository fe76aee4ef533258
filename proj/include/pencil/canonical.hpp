#pragma once

#include "pencil/pencil.hpp"

namespace pencil {

/// Unordered index pairs {i, j} with 0 <= i <= j < n, in the fixed order
/// (0,0), (0,1), ..., (0,n-1), (1,1), ..., (n-1,n-1). This order indexes both
/// the vertex-1 basis of the canonical module and quadratic-form coefficients.
std::size_t pair_count(std::size_t n);
std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n);
std::pair<std::size_t, std::size_t> pair_at(std::size_t index, std::size_t n);

/// Symmetric degree-2 homogeneous polynomial in n variables, stored as one
/// coefficient per pair in the fixed order above.
class QuadraticForm {
 public:
  QuadraticForm(std::size_t vars, std::vector<Scalar> coeffs);

  std::size_t vars() const { return vars_; }
  Field field() const { return coeffs_.front().field(); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  const Scalar& coeff(std::size_t i, std::size_t j) const;

  Scalar eval(const std::vector<Scalar>& point) const;

  bool operator==(const QuadraticForm& rhs) const = default;

 private:
  std::size_t vars_;
  std::vector<Scalar> coeffs_;
};

/// The fully bristled module with dimension vector (n(n+1)/2, n) whose maps
/// act by alpha_r(c_ij) = [r==i] c_j + [r==j] c_i (and alpha_r(c_rr) = c_r).
struct CanonicalModule {
  std::size_t vars;  // n
  Pencil pencil;     // shape (pair_count(n), n), reduced
};

CanonicalModule build_canonical(std::size_t n, Field field);

/// Degree-2 Veronese lift: coordinates c_i c_j in the fixed pair order.
/// For nonzero c this generates the unique bristle through c.
std::vector<Scalar> veronese(const std::vector<Scalar>& c);

/// The linear functional on vertex 1 pairing basis coefficients with the
/// form's coefficients; as a module map it lands in the vertex-1 simple.
Matrix quad_to_functional(const QuadraticForm& q);

/// Extends the canonical module by a third vertex k with maps picking basis
/// coordinates, and verifies the composite-map commutation relations plus the
/// (n(n+1)/2, n, 1) dimension count.
bool beilinson_check(std::size_t n, Field field);

}  // namespace pencil
