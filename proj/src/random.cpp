#include "pencil/random.hpp"

namespace pencil {

Scalar random_scalar(Rng& rng, Field field) {
  if (field.is_prime_field())
    return Scalar::residue(field, rng.below(field.modulus()));
  long num = static_cast<long>(rng.below(9)) - 4;
  long den = static_cast<long>(rng.below(3)) + 1;
  return Scalar::rational(mpq_class(num, den));
}

Scalar random_nonzero_scalar(Rng& rng, Field field) {
  for (;;) {
    Scalar s = random_scalar(rng, field);
    if (!s.is_zero()) return s;
  }
}

Matrix random_matrix(Rng& rng, Field field, std::size_t rows, std::size_t cols) {
  Matrix m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, random_scalar(rng, field));
  return m;
}

Matrix random_invertible(Rng& rng, Field field, std::size_t n) {
  for (;;) {
    Matrix m = random_matrix(rng, field, n, n);
    if (is_invertible(m)) return m;
  }
}

ProjectivePoint random_projective_point(Rng& rng, Field field, std::size_t coords) {
  for (;;) {
    std::vector<Scalar> v;
    v.reserve(coords);
    for (std::size_t i = 0; i < coords; ++i) v.push_back(random_scalar(rng, field));
    bool nonzero = false;
    for (const auto& s : v) nonzero = nonzero || !s.is_zero();
    if (nonzero) return ProjectivePoint(std::move(v));
  }
}

Subspace random_subspace(Rng& rng, Field field, std::size_t ambient, std::size_t dim) {
  for (;;) {
    Subspace s = Subspace::row_span(random_matrix(rng, field, dim, ambient));
    if (s.dim() == dim) return s;
  }
}

Pencil random_reduced_pencil(Rng& rng, Field field, std::size_t max_maps, std::size_t max_source,
                             std::size_t max_target) {
  for (;;) {
    const std::size_t n = 1 + rng.index(max_maps);
    const std::size_t b = 1 + rng.index(max_target);
    const std::size_t a = rng.index(std::min(max_source, n * b) + 1);
    for (int attempt = 0; attempt < 64; ++attempt) {
      std::vector<Matrix> maps;
      maps.reserve(n);
      for (std::size_t i = 0; i < n; ++i) maps.push_back(random_matrix(rng, field, b, a));
      Pencil p(std::move(maps));
      if (is_reduced(p)) return p;
    }
  }
}

Pencil random_bristled_pencil(Rng& rng, Field field, std::size_t maps, std::size_t max_bristles) {
  const std::size_t k = 1 + rng.index(max_bristles);
  Pencil p = Pencil::bristle(random_projective_point(rng, field, maps));
  for (std::size_t i = 1; i < k; ++i)
    p = direct_sum(p, Pencil::bristle(random_projective_point(rng, field, maps)));
  Matrix beta = random_invertible(rng, field, k);
  Matrix gamma = random_invertible(rng, field, k);
  Pencil out(field, maps, k, k);
  for (std::size_t i = 0; i < maps; ++i) out.set_map(i, matmul(gamma, matmul(p.map(i), beta)));
  return out;
}

std::vector<QuadraticForm> random_quadrics(Rng& rng, Field field, std::size_t vars,
                                           std::size_t count) {
  std::vector<QuadraticForm> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Scalar> coeffs;
    coeffs.reserve(pair_count(vars));
    for (std::size_t k = 0; k < pair_count(vars); ++k) coeffs.push_back(random_scalar(rng, field));
    out.emplace_back(vars, std::move(coeffs));
  }
  return out;
}

}  // namespace pencil
