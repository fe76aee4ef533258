#include "pencil/realize.hpp"

#include <algorithm>

#include "pencil/parallel.hpp"

namespace pencil {

Realization realize_variety(std::size_t vars, const std::vector<QuadraticForm>& quadrics,
                            Field field) {
  if (vars == 0) fail(errc::invalid_parameter, "realization needs n >= 1");
  for (const auto& q : quadrics) {
    if (q.vars() != vars)
      fail(errc::invalid_parameter, "all quadrics must share the variable count");
    require_same_field(field, q.field(), "realization");
  }
  CanonicalModule canonical = build_canonical(vars, field);
  const std::size_t N = pair_count(vars);

  Matrix coefficient_rows(field, quadrics.size(), N);
  for (std::size_t r = 0; r < quadrics.size(); ++r)
    for (std::size_t k = 0; k < N; ++k) coefficient_rows.set(r, k, quadrics[r].coeffs()[k]);
  Subspace vertex1 = kernel(coefficient_rows);

  // Restrict each canonical map to the echelon basis of vertex 1.
  const std::size_t a = vertex1.dim();
  Pencil restricted(field, vars, a, vars);
  for (std::size_t i = 0; i < vars; ++i) {
    Matrix m(field, vars, a);
    for (std::size_t k = 0; k < a; ++k) {
      std::vector<Scalar> image = matvec(canonical.pencil.map(i), vertex1.basis().row(k));
      for (std::size_t r = 0; r < vars; ++r) m.set(r, k, image[r]);
    }
    restricted.set_map(i, std::move(m));
  }
  if (!is_reduced(restricted))
    fail(errc::internal_invariant, "realized pencil must inherit reducedness");
  return Realization{vars, quadrics, std::move(restricted), std::move(vertex1)};
}

RealizationReport verify_realization(const Realization& r, const EnumOptions& opts) {
  const Field field = r.pencil.field();
  if (!field.is_prime_field())
    fail(errc::enumeration_unsupported, "realization verification requires a prime field");

  RealizationReport report;
  std::vector<ProjectivePoint> lambdas = all_projective_points(field, r.vars, opts.budget);

  struct Hit {
    ProjectivePoint point;
    std::size_t eigen_dim;
    bool on_variety;
  };
  std::vector<Hit> hits = parallel_collect<Hit>(
      lambdas.size(), opts.threads, [&](std::size_t begin, std::size_t end) {
        std::vector<Hit> chunk;
        for (std::size_t i = begin; i < end; ++i) {
          const ProjectivePoint& lambda = lambdas[i];
          std::size_t dim = eigenvector_space(r.pencil, lambda).dim();
          bool vanishes = true;
          for (const auto& q : r.quadrics)
            if (!q.eval(lambda.coords()).is_zero()) {
              vanishes = false;
              break;
            }
          if (dim > 0 || vanishes) chunk.push_back(Hit{lambda, dim, vanishes});
        }
        return chunk;
      });

  bool sets_match = true;
  for (const Hit& h : hits) {
    report.max_eigenspace_dim = std::max(report.max_eigenspace_dim, h.eigen_dim);
    if (h.eigen_dim > 0) report.eigenvalues.push_back(h.point);
    if (h.on_variety) report.variety_points.push_back(h.point);
    if ((h.eigen_dim > 0) != h.on_variety) sets_match = false;
  }
  sort_points(report.eigenvalues);
  sort_points(report.variety_points);
  report.pass = sets_match && report.max_eigenspace_dim <= 1;
  return report;
}

namespace {

// Restriction of p to the submodule (U1, U2); maps are expressed in the
// echelon bases, so coordinates exist exactly when alpha_i(U1) lies in U2.
Pencil restrict_to_submodule(const Pencil& p, const Subspace& vertex1, const Subspace& vertex2) {
  Pencil out(p.field(), p.map_count(), vertex1.dim(), vertex2.dim());
  for (std::size_t i = 0; i < p.map_count(); ++i) {
    Matrix m(p.field(), vertex2.dim(), vertex1.dim());
    for (std::size_t k = 0; k < vertex1.dim(); ++k) {
      std::vector<Scalar> image = matvec(p.map(i), vertex1.basis().row(k));
      auto coords = vertex2.coordinates(image);
      if (!coords)
        fail(errc::internal_invariant, "bristle sum is not closed under the pencil maps");
      for (std::size_t r = 0; r < vertex2.dim(); ++r) m.set(r, k, (*coords)[r]);
    }
    out.set_map(i, std::move(m));
  }
  return out;
}

}  // namespace

Pencil squareize(const Pencil& p, const EigenvalueSource& source, const EnumOptions& opts) {
  BristleSum bs = bristle_sum_submodule(p, source, opts);
  const std::size_t a1 = bs.vertex1.dim(), b1 = bs.vertex2.dim();
  if (a1 < b1) fail(errc::internal_invariant, "bristle sum with a' < b'");
  Pencil restricted = restrict_to_submodule(p, bs.vertex1, bs.vertex2);
  if (a1 == b1) return restricted;
  return direct_sum(restricted, Pencil(p.field(), p.map_count(), 0, a1 - b1));
}

std::vector<BristleGenerator> select_generating_bristles(const Pencil& p,
                                                         const EigenvalueSource& source,
                                                         const EnumOptions& opts) {
  BristleSum bs = bristle_sum_submodule(p, source, opts);
  std::vector<ProjectivePoint> lambdas = [&] {
    if (!source.enumerates_all()) return source.values();
    return all_projective_points(p.field(), p.map_count(), opts.budget);
  }();

  std::vector<BristleGenerator> picked;
  Subspace span = Subspace::zero(p.field(), p.source_dim());
  for (const auto& lambda : lambdas) {
    if (span.dim() == bs.vertex1.dim()) break;
    Subspace space = eigenvector_space(p, lambda);
    for (std::size_t k = 0; k < space.dim(); ++k) {
      std::vector<Scalar> v = space.basis().row(k);
      if (span.contains(v)) continue;
      Matrix line(p.field(), 1, p.source_dim());
      line.set_row(0, v);
      span = sum(span, Subspace::row_span(line));
      picked.push_back(BristleGenerator{lambda, std::move(v)});
    }
  }
  if (span != bs.vertex1)
    fail(errc::internal_invariant, "greedy bristle selection missed part of the bristle sum");
  return picked;
}

}  // namespace pencil
