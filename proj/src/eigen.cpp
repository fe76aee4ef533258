#include "pencil/eigen.hpp"

#include <algorithm>
#include <cstdlib>

#include "pencil/parallel.hpp"

namespace pencil {

EnumOptions::EnumOptions() : budget(default_enum_budget()), threads(1) {}

std::uint64_t default_enum_budget() {
  static const std::uint64_t value = [] {
    if (const char* env = std::getenv("PENCIL_ENUM_BUDGET")) {
      char* end = nullptr;
      unsigned long long parsed = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && parsed > 0) return static_cast<std::uint64_t>(parsed);
    }
    return std::uint64_t{10'000'000};
  }();
  return value;
}

namespace {

void require_reduced(const Pencil& p, const char* context) {
  if (!is_reduced(p))
    fail(errc::reducedness_required, std::string(context) + " requires a reduced pencil");
}

// Rank-1 test on the image columns; optionally reports the eigenvalue tuple.
bool images_span_line(const Pencil& p, const std::vector<Scalar>& v,
                      std::vector<Scalar>* lambda_out) {
  const std::size_t n = p.map_count(), b = p.target_dim();
  std::vector<std::vector<Scalar>> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) images.push_back(matvec(p.map(i), v));

  std::size_t gen = n, lead = b;
  for (std::size_t i = 0; i < n && gen == n; ++i)
    for (std::size_t r = 0; r < b; ++r)
      if (!images[i][r].is_zero()) {
        gen = i;
        lead = r;
        break;
      }
  if (gen == n) return false;  // all images zero

  const std::vector<Scalar>& w = images[gen];
  Scalar lead_inv = w[lead].inverse();
  std::vector<Scalar> lambda;
  lambda.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Scalar factor = images[i][lead] * lead_inv;
    for (std::size_t r = 0; r < b; ++r)
      if (images[i][r] != factor * w[r]) return false;
    lambda.push_back(std::move(factor));
  }
  if (lambda_out) *lambda_out = std::move(lambda);
  return true;
}

bool is_eigenvector_unchecked(const Pencil& p, const std::vector<Scalar>& v) {
  return images_span_line(p, v, nullptr);
}

Subspace eigenvector_space_unchecked(const Pencil& p, const ProjectivePoint& lambda) {
  const std::size_t n = p.map_count(), a = p.source_dim(), b = p.target_dim();
  if (lambda.size() != n)
    fail(errc::dimension_mismatch, "eigenvalue has " + std::to_string(lambda.size()) +
                                       " coordinates, pencil has " + std::to_string(n) + " maps");
  require_same_field(p.field(), lambda.field(), "eigenvector space");

  // lambda is normalized, so its leading coordinate is 1; substituting
  // w = alpha_lead(v) turns the stacked system {alpha_i v = lambda_i w} into
  // (alpha_i - lambda_i * alpha_lead) v = 0 for the other n-1 indices.
  std::size_t lead = 0;
  while (lambda[lead].is_zero()) ++lead;

  Matrix system(p.field(), (n - 1) * b, a);
  std::size_t block = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == lead) continue;
    const Matrix& alpha = p.map(i);
    const Matrix& anchor = p.map(lead);
    const Scalar& li = lambda[i];
    for (std::size_t r = 0; r < b; ++r)
      for (std::size_t c = 0; c < a; ++c) {
        Scalar value = li.is_zero() ? alpha.at(r, c) : alpha.at(r, c) - li * anchor.at(r, c);
        if (!value.is_zero()) system.set(block * b + r, c, value);
      }
    ++block;
  }
  return kernel(system);
}

std::vector<ProjectivePoint> resolve_eigenvalues(const Pencil& p, const EigenvalueSource& source,
                                                 const EnumOptions& opts, errc missing_list_code) {
  if (source.enumerates_all()) {
    if (!p.field().is_prime_field())
      fail(missing_list_code,
           "eigenvalue enumeration over the rationals needs an explicit eigenvalue list");
    return all_projective_points(p.field(), p.map_count(), opts.budget);
  }
  std::vector<ProjectivePoint> values = source.values();
  for (const auto& v : values) {
    if (v.size() != p.map_count())
      fail(errc::dimension_mismatch, "eigenvalue coordinate count != matrix count");
    require_same_field(p.field(), v.field(), "eigenvalue list");
  }
  return values;
}

}  // namespace

bool is_eigenvector(const Pencil& p, const std::vector<Scalar>& v) {
  require_reduced(p, "eigenvector test");
  if (v.size() != p.source_dim())
    fail(errc::dimension_mismatch, "vector length != source dimension");
  return is_eigenvector_unchecked(p, v);
}

ProjectivePoint eigenvalue_of(const Pencil& p, const std::vector<Scalar>& v) {
  require_reduced(p, "eigenvalue computation");
  if (v.size() != p.source_dim())
    fail(errc::dimension_mismatch, "vector length != source dimension");
  std::vector<Scalar> lambda;
  if (!images_span_line(p, v, &lambda))
    fail(errc::not_an_eigenvector, "the vector is not an eigenvector of the pencil");
  return ProjectivePoint(std::move(lambda));
}

Subspace eigenvector_space(const Pencil& p, const ProjectivePoint& lambda) {
  require_reduced(p, "eigenvector space");
  return eigenvector_space_unchecked(p, lambda);
}

std::vector<ProjectivePoint> eigenvector_variety(const Pencil& p, const EnumOptions& opts) {
  if (!p.field().is_prime_field())
    fail(errc::enumeration_unsupported, "variety enumeration requires a prime field");
  require_reduced(p, "eigenvector variety");
  std::vector<ProjectivePoint> lambdas =
      all_projective_points(p.field(), p.map_count(), opts.budget);

  std::vector<ProjectivePoint> points = parallel_collect<ProjectivePoint>(
      lambdas.size(), opts.threads, [&](std::size_t begin, std::size_t end) {
        std::vector<ProjectivePoint> chunk;
        for (std::size_t i = begin; i < end; ++i) {
          Subspace space = eigenvector_space_unchecked(p, lambdas[i]);
          for (auto& pt : subspace_projective_points(space, opts.budget))
            chunk.push_back(std::move(pt));
        }
        return chunk;
      });
  sort_points(points);
  return points;
}

std::vector<ProjectivePoint> eigenvector_variety_oracle(const Pencil& p, const EnumOptions& opts) {
  if (!p.field().is_prime_field())
    fail(errc::enumeration_unsupported, "the brute-force scan requires a prime field");
  require_reduced(p, "eigenvector variety oracle");
  const std::size_t a = p.source_dim();
  auto count = projective_point_count(p.field().modulus(), a);
  if (!count || *count > opts.budget)
    fail(errc::enumeration_too_large, "P(F_q^a) scan exceeds the enumeration budget");

  std::vector<ProjectivePoint> points = parallel_collect<ProjectivePoint>(
      static_cast<std::size_t>(*count), opts.threads, [&](std::size_t begin, std::size_t end) {
        std::vector<ProjectivePoint> chunk;
        for (std::size_t i = begin; i < end; ++i) {
          std::vector<Scalar> v = projective_representative(p.field(), a, i);
          if (is_eigenvector_unchecked(p, v)) chunk.emplace_back(std::move(v));
        }
        return chunk;
      });
  sort_points(points);
  return points;
}

std::vector<ProjectivePoint> eigenvalue_set(const Pencil& p, const EigenvalueSource& source,
                                            const EnumOptions& opts) {
  require_reduced(p, "eigenvalue set");
  std::vector<ProjectivePoint> lambdas =
      resolve_eigenvalues(p, source, opts, errc::enumeration_unsupported);
  std::vector<ProjectivePoint> hits = parallel_collect<ProjectivePoint>(
      lambdas.size(), opts.threads, [&](std::size_t begin, std::size_t end) {
        std::vector<ProjectivePoint> chunk;
        for (std::size_t i = begin; i < end; ++i)
          if (eigenvector_space_unchecked(p, lambdas[i]).dim() > 0) chunk.push_back(lambdas[i]);
        return chunk;
      });
  sort_points(hits);
  hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
  return hits;
}

bool has_sufficiently_many(const Pencil& p, const EigenvalueSource& source,
                           const EnumOptions& opts) {
  require_reduced(p, "eigenvector span test");
  const std::size_t a = p.source_dim();
  if (a == 0) return true;
  std::vector<ProjectivePoint> lambdas =
      resolve_eigenvalues(p, source, opts, errc::explicit_eigenvalues_required);

  if (opts.threads <= 1) {
    Subspace span = Subspace::zero(p.field(), a);
    for (const auto& lambda : lambdas) {
      span = sum(span, eigenvector_space_unchecked(p, lambda));
      if (span.is_full()) return true;
    }
    return span.is_full();
  }
  std::vector<Subspace> spaces = parallel_collect<Subspace>(
      lambdas.size(), opts.threads, [&](std::size_t begin, std::size_t end) {
        std::vector<Subspace> chunk;
        for (std::size_t i = begin; i < end; ++i)
          chunk.push_back(eigenvector_space_unchecked(p, lambdas[i]));
        return chunk;
      });
  Subspace span = Subspace::zero(p.field(), a);
  for (const auto& s : spaces) {
    span = sum(span, s);
    if (span.is_full()) return true;
  }
  return span.is_full();
}

BristleSum bristle_sum_submodule(const Pencil& p, const EigenvalueSource& source,
                                 const EnumOptions& opts) {
  require_reduced(p, "bristle sum");
  const std::size_t a = p.source_dim(), b = p.target_dim(), n = p.map_count();
  std::vector<ProjectivePoint> lambdas =
      resolve_eigenvalues(p, source, opts, errc::explicit_eigenvalues_required);

  std::vector<Subspace> spaces = parallel_collect<Subspace>(
      lambdas.size(), opts.threads, [&](std::size_t begin, std::size_t end) {
        std::vector<Subspace> chunk;
        for (std::size_t i = begin; i < end; ++i)
          chunk.push_back(eigenvector_space_unchecked(p, lambdas[i]));
        return chunk;
      });
  Subspace vertex1 = Subspace::zero(p.field(), a);
  for (const auto& s : spaces) {
    vertex1 = sum(vertex1, s);
    if (vertex1.is_full()) break;
  }

  Matrix image_rows(p.field(), n * vertex1.dim(), b);
  for (std::size_t k = 0; k < vertex1.dim(); ++k) {
    std::vector<Scalar> u = vertex1.basis().row(k);
    for (std::size_t i = 0; i < n; ++i) image_rows.set_row(i * vertex1.dim() + k, matvec(p.map(i), u));
  }
  Subspace vertex2 = Subspace::row_span(image_rows);

  if (vertex1.dim() < vertex2.dim())
    fail(errc::internal_invariant, "bristle sum violates dim(vertex1) >= dim(vertex2)");
  return BristleSum{std::move(vertex1), std::move(vertex2)};
}

}  // namespace pencil
