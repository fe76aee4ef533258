#include "pencil/pencil.hpp"

namespace pencil {

Pencil::Pencil(Field field, std::size_t map_count, std::size_t source_dim, std::size_t target_dim)
    : field_(field), source_dim_(source_dim), target_dim_(target_dim) {
  if (map_count == 0) fail(errc::invalid_parameter, "a pencil needs at least one matrix");
  maps_.assign(map_count, Matrix(field, target_dim, source_dim));
}

Pencil::Pencil(std::vector<Matrix> maps)
    : field_(maps.empty() ? Field::rationals() : maps.front().field()),
      source_dim_(maps.empty() ? 0 : maps.front().cols()),
      target_dim_(maps.empty() ? 0 : maps.front().rows()),
      maps_(std::move(maps)) {
  if (maps_.empty()) fail(errc::invalid_parameter, "a pencil needs at least one matrix");
  for (const Matrix& m : maps_) {
    require_same_field(field_, m.field(), "pencil construction");
    if (m.rows() != target_dim_ || m.cols() != source_dim_)
      fail(errc::dimension_mismatch, "pencil matrices must share one shape");
  }
}

Pencil Pencil::simple(int vertex, std::size_t map_count, Field field) {
  if (vertex == 1) return Pencil(field, map_count, 1, 0);
  if (vertex == 2) return Pencil(field, map_count, 0, 1);
  fail(errc::invalid_parameter, "simple module vertex must be 1 or 2");
}

Pencil Pencil::bristle(const ProjectivePoint& type) {
  Pencil out(type.field(), type.size(), 1, 1);
  for (std::size_t i = 0; i < type.size(); ++i) {
    Matrix m(type.field(), 1, 1);
    m.set(0, 0, type[i]);
    out.set_map(i, std::move(m));
  }
  return out;
}

void Pencil::set_map(std::size_t i, Matrix m) {
  require_same_field(field_, m.field(), "pencil map assignment");
  if (m.rows() != target_dim_ || m.cols() != source_dim_)
    fail(errc::dimension_mismatch, "pencil map has the wrong shape");
  maps_[i] = std::move(m);
}

Matrix Pencil::stacked() const {
  Matrix out(field_, map_count() * target_dim_, source_dim_);
  for (std::size_t i = 0; i < map_count(); ++i)
    for (std::size_t r = 0; r < target_dim_; ++r)
      for (std::size_t c = 0; c < source_dim_; ++c)
        out.set(i * target_dim_ + r, c, maps_[i].at(r, c));
  return out;
}

Matrix Pencil::combined() const {
  Matrix out(field_, target_dim_, map_count() * source_dim_);
  for (std::size_t i = 0; i < map_count(); ++i)
    for (std::size_t r = 0; r < target_dim_; ++r)
      for (std::size_t c = 0; c < source_dim_; ++c)
        out.set(r, i * source_dim_ + c, maps_[i].at(r, c));
  return out;
}

Matrix Pencil::image_columns(const std::vector<Scalar>& v) const {
  if (v.size() != source_dim_) fail(errc::dimension_mismatch, "vector length != source dimension");
  Matrix out(field_, target_dim_, map_count());
  for (std::size_t i = 0; i < map_count(); ++i) {
    std::vector<Scalar> img = matvec(maps_[i], v);
    for (std::size_t r = 0; r < target_dim_; ++r) out.set(r, i, img[r]);
  }
  return out;
}

bool Pencil::operator==(const Pencil& rhs) const {
  return field_ == rhs.field_ && source_dim_ == rhs.source_dim_ &&
         target_dim_ == rhs.target_dim_ && maps_ == rhs.maps_;
}

bool is_reduced(const Pencil& p) { return rank(p.stacked()) == p.source_dim(); }

Pencil direct_sum(const Pencil& p, const Pencil& q) {
  require_same_field(p.field(), q.field(), "direct sum");
  if (p.map_count() != q.map_count())
    fail(errc::dimension_mismatch, "direct sum needs equal matrix counts");
  std::vector<Matrix> maps;
  maps.reserve(p.map_count());
  for (std::size_t i = 0; i < p.map_count(); ++i)
    maps.push_back(block_diag(p.map(i), q.map(i)));
  return Pencil(std::move(maps));
}

std::size_t hom_dim(const Pencil& from, const Pencil& to) {
  require_same_field(from.field(), to.field(), "hom dimension");
  if (from.map_count() != to.map_count())
    fail(errc::dimension_mismatch, "hom dimension needs equal matrix counts");
  const std::size_t n = from.map_count();
  const std::size_t a = from.source_dim(), b = from.target_dim();
  const std::size_t a2 = to.source_dim(), b2 = to.target_dim();
  // Unknowns: F1 (a2 x a) then F2 (b2 x b), row-major.
  const std::size_t unknowns = a2 * a + b2 * b;
  Matrix system(from.field(), n * b2 * a, unknowns);
  std::size_t eq = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < b2; ++r) {
      for (std::size_t c = 0; c < a; ++c, ++eq) {
        for (std::size_t s = 0; s < a2; ++s) {
          Scalar coef = to.map(i).at(r, s);
          if (!coef.is_zero()) system.set(eq, s * a + c, coef);
        }
        for (std::size_t t = 0; t < b; ++t) {
          Scalar coef = from.map(i).at(t, c);
          if (!coef.is_zero()) system.set(eq, a2 * a + r * b + t, coef.negated());
        }
      }
    }
  }
  return unknowns - rank(system);
}

ReducedDecomposition reduced_decomposition(const Pencil& p) {
  const std::size_t a = p.source_dim(), b = p.target_dim();
  Subspace common_kernel = kernel(p.stacked());
  const std::size_t s = common_kernel.dim();

  std::vector<bool> in_kernel_pivots(a, false);
  for (auto c : common_kernel.pivots()) in_kernel_pivots[c] = true;
  std::vector<std::size_t> complement;
  complement.reserve(a - s);
  for (std::size_t j = 0; j < a; ++j)
    if (!in_kernel_pivots[j]) complement.push_back(j);

  Pencil reduced(p.field(), p.map_count(), a - s, b);
  for (std::size_t i = 0; i < p.map_count(); ++i) {
    Matrix m(p.field(), b, a - s);
    for (std::size_t k = 0; k < complement.size(); ++k)
      for (std::size_t r = 0; r < b; ++r) m.set(r, k, p.map(i).at(r, complement[k]));
    reduced.set_map(i, std::move(m));
  }

  // Basis columns: the kernel first, then the coordinate complement.
  Matrix basis(p.field(), a, a);
  for (std::size_t k = 0; k < s; ++k)
    for (std::size_t r = 0; r < a; ++r) basis.set(r, k, common_kernel.basis().at(k, r));
  Scalar one = Scalar::one(p.field());
  for (std::size_t k = 0; k < complement.size(); ++k) basis.set(complement[k], s + k, one);

  return ReducedDecomposition{s, std::move(reduced), std::move(basis)};
}

bool is_equivalence_witness(const Pencil& p, const Pencil& other, const Matrix& beta,
                            const Matrix& gamma) {
  require_same_field(p.field(), other.field(), "equivalence witness");
  if (p.map_count() != other.map_count() || !(p.dim() == other.dim()))
    fail(errc::invalid_witness, "witness connects pencils of different shapes");
  if (beta.rows() != p.source_dim() || beta.cols() != p.source_dim() ||
      gamma.rows() != p.target_dim() || gamma.cols() != p.target_dim())
    fail(errc::invalid_witness, "witness matrices have the wrong shapes");
  if (!is_invertible(beta) || !is_invertible(gamma))
    fail(errc::invalid_witness, "witness matrices must be invertible");
  for (std::size_t i = 0; i < p.map_count(); ++i)
    if (matmul(gamma, matmul(p.map(i), beta)) != other.map(i)) return false;
  return true;
}

}  // namespace pencil
