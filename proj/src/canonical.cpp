#include "pencil/canonical.hpp"

namespace pencil {

std::size_t pair_count(std::size_t n) { return n * (n + 1) / 2; }

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
  if (i > j) std::swap(i, j);
  if (j >= n) fail(errc::invalid_parameter, "pair index out of range");
  return i * n - i * (i - 1) / 2 + (j - i);
}

std::pair<std::size_t, std::size_t> pair_at(std::size_t index, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t row = n - i;
    if (index < row) return {i, i + index};
    index -= row;
  }
  fail(errc::invalid_parameter, "pair index out of range");
}

QuadraticForm::QuadraticForm(std::size_t vars, std::vector<Scalar> coeffs)
    : vars_(vars), coeffs_(std::move(coeffs)) {
  if (vars_ == 0) fail(errc::invalid_parameter, "a quadratic form needs at least one variable");
  if (coeffs_.size() != pair_count(vars_))
    fail(errc::dimension_mismatch, "quadratic form needs exactly n(n+1)/2 coefficients");
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    require_same_field(coeffs_[0].field(), coeffs_[i].field(), "quadratic form");
}

const Scalar& QuadraticForm::coeff(std::size_t i, std::size_t j) const {
  return coeffs_[pair_index(i, j, vars_)];
}

Scalar QuadraticForm::eval(const std::vector<Scalar>& point) const {
  if (point.size() != vars_)
    fail(errc::dimension_mismatch, "evaluation point has the wrong coordinate count");
  Scalar total = Scalar::zero(field());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    auto [i, j] = pair_at(k, vars_);
    total = total + coeffs_[k] * point[i] * point[j];
  }
  return total;
}

CanonicalModule build_canonical(std::size_t n, Field field) {
  if (n == 0) fail(errc::invalid_parameter, "the canonical module needs n >= 1");
  const std::size_t N = pair_count(n);
  Pencil p(field, n, N, n);
  Scalar one = Scalar::one(field);
  for (std::size_t r = 0; r < n; ++r) {
    Matrix m(field, n, N);
    for (std::size_t k = 0; k < N; ++k) {
      auto [i, j] = pair_at(k, n);
      if (i == j) {
        if (r == i) m.set(i, k, one);
      } else {
        if (r == i) m.set(j, k, one);
        if (r == j) m.set(i, k, one);
      }
    }
    p.set_map(r, std::move(m));
  }
  return CanonicalModule{n, std::move(p)};
}

std::vector<Scalar> veronese(const std::vector<Scalar>& c) {
  const std::size_t n = c.size();
  if (n == 0) fail(errc::invalid_parameter, "veronese lift of an empty vector");
  std::vector<Scalar> out;
  out.reserve(pair_count(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) out.push_back(c[i] * c[j]);
  return out;
}

Matrix quad_to_functional(const QuadraticForm& q) {
  Matrix row(q.field(), 1, pair_count(q.vars()));
  for (std::size_t k = 0; k < q.coeffs().size(); ++k) row.set(0, k, q.coeffs()[k]);
  return row;
}

bool beilinson_check(std::size_t n, Field field) {
  if (n == 0) fail(errc::invalid_parameter, "beilinson check needs n >= 1");
  CanonicalModule c = build_canonical(n, field);
  if (!(c.pencil.dim() == DimVec{pair_count(n), n})) return false;

  // Vertex 2 -> vertex 3 maps pick single coordinates: row i of the identity.
  std::vector<Matrix> tail;
  tail.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix row(field, 1, n);
    row.set(0, i, Scalar::one(field));
    tail.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (matmul(tail[i], c.pencil.map(j)) != matmul(tail[j], c.pencil.map(i))) return false;
  return true;
}

}  // namespace pencil
