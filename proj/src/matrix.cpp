#include "pencil/matrix.hpp"

#include <algorithm>

#include "elem_ops.hpp"

namespace pencil {

struct MatrixAlgorithms {
  static std::vector<std::uint64_t>& fp(Matrix& m) { return std::get<0>(m.data_); }
  static const std::vector<std::uint64_t>& fp(const Matrix& m) { return std::get<0>(m.data_); }
  static std::vector<mpq_class>& rat(Matrix& m) { return std::get<1>(m.data_); }
  static const std::vector<mpq_class>& rat(const Matrix& m) { return std::get<1>(m.data_); }
};

using MA = MatrixAlgorithms;

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (field.is_prime_field())
    data_ = std::vector<std::uint64_t>(rows * cols, 0);
  else
    data_ = std::vector<mpq_class>(rows * cols);
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  Scalar one = Scalar::one(field);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, one);
  return m;
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
  if (field_.is_prime_field()) return Scalar::residue(field_, MA::fp(*this)[r * cols_ + c]);
  return Scalar::rational(MA::rat(*this)[r * cols_ + c]);
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& value) {
  require_same_field(field_, value.field(), "matrix entry assignment");
  if (field_.is_prime_field())
    MA::fp(*this)[r * cols_ + c] = value.residue_value();
  else
    MA::rat(*this)[r * cols_ + c] = value.rational_value();
}

std::vector<Scalar> Matrix::row(std::size_t r) const {
  std::vector<Scalar> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(at(r, c));
  return out;
}

void Matrix::set_row(std::size_t r, const std::vector<Scalar>& values) {
  if (values.size() != cols_)
    fail(errc::dimension_mismatch, "row length does not match column count");
  for (std::size_t c = 0; c < cols_; ++c) set(r, c, values[c]);
}

Matrix Matrix::transposed() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.set(c, r, at(r, c));
  return out;
}

bool Matrix::is_zero() const {
  if (field_.is_prime_field()) {
    for (auto v : MA::fp(*this))
      if (v != 0) return false;
  } else {
    for (const auto& v : MA::rat(*this))
      if (sgn(v) != 0) return false;
  }
  return true;
}

bool Matrix::operator==(const Matrix& rhs) const {
  return field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

Echelon rref(const Matrix& m) {
  Matrix reduced = m;
  std::vector<std::size_t> pivots;
  if (m.field().is_prime_field()) {
    detail::FpOps ops(m.field().modulus());
    pivots = detail::rref_in_place(MA::fp(reduced), m.rows(), m.cols(), ops);
  } else {
    detail::RatOps ops;
    pivots = detail::rref_in_place(MA::rat(reduced), m.rows(), m.cols(), ops);
  }
  return Echelon{std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix kernel_rows(const Matrix& m) {
  Echelon e = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  const std::size_t dim = cols - e.pivots.size();

  Matrix basis(m.field(), dim, cols);
  if (m.field().is_prime_field()) {
    detail::FpOps ops(m.field().modulus());
    auto& b = MA::fp(basis);
    const auto& r = MA::fp(e.reduced);
    std::size_t row = 0;
    for (std::size_t f = 0; f < cols; ++f) {
      if (is_pivot[f]) continue;
      b[row * cols + f] = ops.one();
      for (std::size_t i = 0; i < e.pivots.size(); ++i)
        b[row * cols + e.pivots[i]] = ops.neg(r[i * cols + f]);
      ++row;
    }
    detail::rref_in_place(b, dim, cols, ops);
  } else {
    detail::RatOps ops;
    auto& b = MA::rat(basis);
    const auto& r = MA::rat(e.reduced);
    std::size_t row = 0;
    for (std::size_t f = 0; f < cols; ++f) {
      if (is_pivot[f]) continue;
      b[row * cols + f] = ops.one();
      for (std::size_t i = 0; i < e.pivots.size(); ++i)
        b[row * cols + e.pivots[i]] = ops.neg(r[i * cols + f]);
      ++row;
    }
    detail::rref_in_place(b, dim, cols, ops);
  }
  return basis;
}

Matrix matmul(const Matrix& lhs, const Matrix& rhs) {
  require_same_field(lhs.field(), rhs.field(), "matrix product");
  if (lhs.cols() != rhs.rows())
    fail(errc::dimension_mismatch, "matrix product shape mismatch: " + std::to_string(lhs.rows()) +
                                       "x" + std::to_string(lhs.cols()) + " * " +
                                       std::to_string(rhs.rows()) + "x" + std::to_string(rhs.cols()));
  Matrix out(lhs.field(), lhs.rows(), rhs.cols());
  const std::size_t n = lhs.rows(), k = lhs.cols(), m = rhs.cols();
  if (lhs.field().is_prime_field()) {
    detail::FpOps ops(lhs.field().modulus());
    const auto& a = MA::fp(lhs);
    const auto& b = MA::fp(rhs);
    auto& c = MA::fp(out);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t t = 0; t < k; ++t) {
        std::uint64_t f = a[i * k + t];
        if (f == 0) continue;
        for (std::size_t j = 0; j < m; ++j) c[i * m + j] = ops.muladd(c[i * m + j], f, b[t * m + j]);
      }
  } else {
    const auto& a = MA::rat(lhs);
    const auto& b = MA::rat(rhs);
    auto& c = MA::rat(out);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t t = 0; t < k; ++t) {
        const mpq_class& f = a[i * k + t];
        if (sgn(f) == 0) continue;
        for (std::size_t j = 0; j < m; ++j) c[i * m + j] += f * b[t * m + j];
      }
  }
  return out;
}

std::vector<Scalar> matvec(const Matrix& m, const std::vector<Scalar>& v) {
  if (v.size() != m.cols()) fail(errc::dimension_mismatch, "vector length does not match columns");
  Matrix col(m.field(), m.cols(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) col.set(i, 0, v[i]);
  Matrix prod = matmul(m, col);
  std::vector<Scalar> out;
  out.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(prod.at(i, 0));
  return out;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  require_same_field(top.field(), bottom.field(), "vertical stack");
  if (top.cols() != bottom.cols()) fail(errc::dimension_mismatch, "vstack column mismatch");
  Matrix out(top.field(), top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r)
    for (std::size_t c = 0; c < top.cols(); ++c) out.set(r, c, top.at(r, c));
  for (std::size_t r = 0; r < bottom.rows(); ++r)
    for (std::size_t c = 0; c < bottom.cols(); ++c) out.set(top.rows() + r, c, bottom.at(r, c));
  return out;
}

Matrix hstack(const Matrix& left, const Matrix& right) {
  require_same_field(left.field(), right.field(), "horizontal stack");
  if (left.rows() != right.rows()) fail(errc::dimension_mismatch, "hstack row mismatch");
  Matrix out(left.field(), left.rows(), left.cols() + right.cols());
  for (std::size_t r = 0; r < left.rows(); ++r) {
    for (std::size_t c = 0; c < left.cols(); ++c) out.set(r, c, left.at(r, c));
    for (std::size_t c = 0; c < right.cols(); ++c) out.set(r, left.cols() + c, right.at(r, c));
  }
  return out;
}

Matrix block_diag(const Matrix& upper_left, const Matrix& lower_right) {
  require_same_field(upper_left.field(), lower_right.field(), "block diagonal");
  Matrix out(upper_left.field(), upper_left.rows() + lower_right.rows(),
             upper_left.cols() + lower_right.cols());
  for (std::size_t r = 0; r < upper_left.rows(); ++r)
    for (std::size_t c = 0; c < upper_left.cols(); ++c) out.set(r, c, upper_left.at(r, c));
  for (std::size_t r = 0; r < lower_right.rows(); ++r)
    for (std::size_t c = 0; c < lower_right.cols(); ++c)
      out.set(upper_left.rows() + r, upper_left.cols() + c, lower_right.at(r, c));
  return out;
}

bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

std::vector<Scalar> zero_vector(Field field, std::size_t size) {
  return std::vector<Scalar>(size, Scalar::zero(field));
}

}  // namespace pencil
