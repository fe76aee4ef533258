#pragma once

#include "pencil/canonical.hpp"
#include "pencil/eigen.hpp"

namespace pencil {

/// Reduced pencil whose eigenvalue set is the common zero locus of the input
/// quadrics: vertex 1 is the intersection of the functional kernels inside
/// the canonical module, vertex 2 stays k^n.
struct Realization {
  std::size_t vars;                    // n
  std::vector<QuadraticForm> quadrics;
  Pencil pencil;                       // shape (pair_count(n) - rank, n)
  Subspace inclusion;                  // vertex-1 subspace of the canonical module
};

Realization realize_variety(std::size_t vars, const std::vector<QuadraticForm>& quadrics,
                            Field field);

struct RealizationReport {
  std::vector<ProjectivePoint> eigenvalues;     // eigenvalue set of the pencil
  std::vector<ProjectivePoint> variety_points;  // zero locus by direct scan
  std::size_t max_eigenspace_dim = 0;
  bool pass = false;  // set equality and eigenspace dimensions <= 1
};

/// Compares the realized pencil's eigenvalue set against a brute-force scan
/// of the quadrics' zero locus. Prime fields only.
RealizationReport verify_realization(const Realization& r, const EnumOptions& opts = {});

/// Restricts to the bristle-generated submodule and pads with vertex-2
/// simples, producing a reduced square pencil with the same eigenvalue set.
Pencil squareize(const Pencil& p, const EigenvalueSource& source = EigenvalueSource::all(),
                 const EnumOptions& opts = {});

struct BristleGenerator {
  ProjectivePoint eigenvalue;
  std::vector<Scalar> eigenvector;
};

/// Greedily picks eigenvectors that strictly grow the vertex-1 span; the
/// returned bristles sum to the bristle-generated submodule, and their count
/// equals its vertex-1 dimension.
std::vector<BristleGenerator> select_generating_bristles(
    const Pencil& p, const EigenvalueSource& source = EigenvalueSource::all(),
    const EnumOptions& opts = {});

}  // namespace pencil
