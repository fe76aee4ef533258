#pragma once

#include <random>

#include "pencil/canonical.hpp"

namespace pencil {

/// Deterministic generator for the randomized suites. Draws avoid
/// std::uniform_int_distribution so streams are identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t next() { return gen_(); }
  std::uint64_t below(std::uint64_t bound) { return bound <= 1 ? 0 : next() % bound; }
  std::size_t index(std::size_t bound) { return static_cast<std::size_t>(below(bound)); }

 private:
  std::mt19937_64 gen_;
};

Scalar random_scalar(Rng& rng, Field field);
Scalar random_nonzero_scalar(Rng& rng, Field field);
Matrix random_matrix(Rng& rng, Field field, std::size_t rows, std::size_t cols);
Matrix random_invertible(Rng& rng, Field field, std::size_t n);
ProjectivePoint random_projective_point(Rng& rng, Field field, std::size_t coords);
Subspace random_subspace(Rng& rng, Field field, std::size_t ambient, std::size_t dim);

/// Random shape with 1 <= n <= max_maps, 1 <= b <= max_target and
/// a <= min(max_source, n*b), resampled until the stacked matrix has full
/// column rank.
Pencil random_reduced_pencil(Rng& rng, Field field, std::size_t max_maps, std::size_t max_source,
                             std::size_t max_target);

/// A direct sum of 1..max_bristles bristles conjugated by random invertible
/// base changes; reduced and generated by its bristle submodules.
Pencil random_bristled_pencil(Rng& rng, Field field, std::size_t maps, std::size_t max_bristles);

std::vector<QuadraticForm> random_quadrics(Rng& rng, Field field, std::size_t vars,
                                           std::size_t count);

}  // namespace pencil
