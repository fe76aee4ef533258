#include "pencil/subspace.hpp"

namespace pencil {

namespace {

Matrix drop_zero_rows(const Matrix& m, std::size_t keep) {
  Matrix out(m.field(), keep, m.cols());
  for (std::size_t r = 0; r < keep; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, c, m.at(r, c));
  return out;
}

}  // namespace

Subspace Subspace::zero(Field field, std::size_t ambient_dim) {
  return Subspace(Matrix(field, 0, ambient_dim), {});
}

Subspace Subspace::full(Field field, std::size_t ambient_dim) {
  std::vector<std::size_t> pivots(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) pivots[i] = i;
  return Subspace(Matrix::identity(field, ambient_dim), std::move(pivots));
}

Subspace Subspace::row_span(const Matrix& rows) {
  Echelon e = rref(rows);
  Matrix basis = drop_zero_rows(e.reduced, e.pivots.size());
  return Subspace(std::move(basis), std::move(e.pivots));
}

std::optional<std::vector<Scalar>> Subspace::coordinates(const std::vector<Scalar>& v) const {
  if (v.size() != ambient_dim()) fail(errc::dimension_mismatch, "vector outside the ambient space");
  std::vector<Scalar> residual = v;
  std::vector<Scalar> coeffs;
  coeffs.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    Scalar c = residual[pivots_[i]];
    coeffs.push_back(c);
    if (c.is_zero()) continue;
    for (std::size_t k = 0; k < ambient_dim(); ++k)
      residual[k] = residual[k] - c * basis_.at(i, k);
  }
  for (const Scalar& r : residual)
    if (!r.is_zero()) return std::nullopt;
  return coeffs;
}

bool Subspace::contains(const std::vector<Scalar>& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim())
    fail(errc::dimension_mismatch, "subspaces of different ambient spaces");
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

std::vector<Scalar> Subspace::combination(const std::vector<Scalar>& coeffs) const {
  if (coeffs.size() != dim()) fail(errc::dimension_mismatch, "coefficient count != dimension");
  std::vector<Scalar> out = zero_vector(field(), ambient_dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (coeffs[i].is_zero()) continue;
    for (std::size_t k = 0; k < ambient_dim(); ++k)
      out[k] = out[k] + coeffs[i] * basis_.at(i, k);
  }
  return out;
}

Subspace kernel(const Matrix& m) { return Subspace::row_span(kernel_rows(m)); }

Subspace column_space(const Matrix& m) { return Subspace::row_span(m.transposed()); }

Subspace sum(const Subspace& u, const Subspace& v) {
  require_same_field(u.field(), v.field(), "subspace sum");
  if (u.ambient_dim() != v.ambient_dim())
    fail(errc::dimension_mismatch, "subspace sum: ambient dimensions differ");
  return Subspace::row_span(vstack(u.basis(), v.basis()));
}

Subspace intersection(const Subspace& u, const Subspace& v) {
  require_same_field(u.field(), v.field(), "subspace intersection");
  if (u.ambient_dim() != v.ambient_dim())
    fail(errc::dimension_mismatch, "subspace intersection: ambient dimensions differ");
  // Solve y*U = z*V: kernel of [U^T | -V^T]; the intersection is spanned by
  // the y-parts mapped back through U.
  const std::size_t r = u.dim(), s = v.dim(), n = u.ambient_dim();
  Matrix system(u.field(), n, r + s);
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t i = 0; i < r; ++i) system.set(row, i, u.basis().at(i, row));
    for (std::size_t j = 0; j < s; ++j) system.set(row, r + j, v.basis().at(j, row).negated());
  }
  Matrix null = kernel_rows(system);
  Matrix candidates(u.field(), null.rows(), n);
  for (std::size_t k = 0; k < null.rows(); ++k) {
    std::vector<Scalar> coeffs;
    coeffs.reserve(r);
    for (std::size_t i = 0; i < r; ++i) coeffs.push_back(null.at(k, i));
    candidates.set_row(k, u.combination(coeffs));
  }
  return Subspace::row_span(candidates);
}

}  // namespace pencil
