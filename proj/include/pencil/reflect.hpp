#pragma once

#include "pencil/eigen.hpp"

namespace pencil {

/// The fixed (n+2)-element eigenvalue set used by the saturation harness:
/// <e_{n-1}>, <e_n>, <e_i + e_{i+1}> for 1 <= i < n, and <e_1 + e_n>
/// (1-based indices). Needs n >= 3; for n = 2 the listed classes collide.
std::vector<ProjectivePoint> e0_set(std::size_t n, Field field);

/// Sink reflection composed with the vertex relabel: the kernel of the
/// combined map (k^a)^n -> k^b, blocks transposed to shape a x z, gives the
/// pencil (z, a; omega_1, ..., omega_n). Output is one canonical
/// representative of the equivalence class; it is always reduced.
Pencil sigma(const Pencil& p);

/// Left adjoint: cokernel of the stacked map k^a -> (k^b)^n, with the
/// coordinate complement of the image's echelon pivots as quotient basis.
Pencil sigma_minus(const Pencil& p);

enum class SigmaDirection { forward, inverse };

struct OrbitRow {
  std::size_t t = 0;
  DimVec dim;
  enum class E0 { yes, no, skipped } e0 = E0::skipped;
  std::optional<bool> fully_sufficient;  // unrestricted-eigenvalue span test
  std::size_t dropped_simples = 0;       // vertex-1 simples removed before testing
};

struct OrbitReport {
  std::vector<OrbitRow> rows;
  std::optional<std::size_t> first_sufficient;
  std::string serialize() const;
};

/// Applies sigma (or sigma_minus) t times, logging dimension vectors and,
/// when requested over a prime field with n >= 3, per-iterate sufficiency of
/// the E0 eigenvalues (track_full additionally tests the unrestricted
/// eigenvalue set). Stops early once the pencil reaches (0,0).
std::pair<Pencil, OrbitReport> sigma_iterate(const Pencil& p, std::size_t t, SigmaDirection dir,
                                             bool track_e0 = false, bool track_full = false,
                                             const EnumOptions& opts = {});

/// Dimension vectors (0,1), (1,n), then (a,b) -> (b, n*b - a); every member
/// satisfies a < b and a^2 + b^2 - n*a*b = 1. Needs n >= 2.
std::vector<DimVec> preprojective_dimvecs(std::size_t n, std::size_t count);

/// The sigma_minus iterates of the vertex-2 simple; dimension vectors follow
/// preprojective_dimvecs and none of them has an eigenvector.
std::vector<Pencil> build_preprojectives(std::size_t n, std::size_t count, Field field);

/// Tests E0 sufficiency along the sigma orbit for t = 0..t_max, normalizing
/// non-reduced iterates through reduced_decomposition first. Reports the full
/// flag sequence and the first sufficient t. Needs n >= 3 and a prime field.
OrbitReport saturation_harness(const Pencil& p, std::size_t t_max, const EnumOptions& opts = {});

}  // namespace pencil
