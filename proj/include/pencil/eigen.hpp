#pragma once

#include <optional>

#include "pencil/pencil.hpp"

namespace pencil {

/// Budget/worker knobs for the enumeration loops. The default budget is
/// 10^7 candidates, overridable through PENCIL_ENUM_BUDGET.
struct EnumOptions {
  std::uint64_t budget;
  unsigned threads;
  EnumOptions();
  EnumOptions(std::uint64_t budget_, unsigned threads_) : budget(budget_), threads(threads_) {}
};

std::uint64_t default_enum_budget();

/// Where eigenvalue-indexed operations draw their candidate eigenvalues:
/// either all of P(F_q^n) (prime fields only) or an explicit list.
class EigenvalueSource {
 public:
  static EigenvalueSource all() { return EigenvalueSource(std::nullopt); }
  static EigenvalueSource list(std::vector<ProjectivePoint> values) {
    return EigenvalueSource(std::move(values));
  }
  bool enumerates_all() const { return !values_.has_value(); }
  const std::vector<ProjectivePoint>& values() const { return *values_; }

 private:
  explicit EigenvalueSource(std::optional<std::vector<ProjectivePoint>> values)
      : values_(std::move(values)) {}
  std::optional<std::vector<ProjectivePoint>> values_;
};

/// True iff the images alpha_1(v), ..., alpha_n(v) span an exactly
/// 1-dimensional subspace. Requires a reduced pencil; v = 0 gives false.
bool is_eigenvector(const Pencil& p, const std::vector<Scalar>& v);

/// The class (lambda_1 : ... : lambda_n) with alpha_i(v) = lambda_i * w;
/// independent of the generator w. Requires is_eigenvector(p, v).
ProjectivePoint eigenvalue_of(const Pencil& p, const std::vector<Scalar>& v);

/// All v in k^a admitting some w with alpha_i(v) = lambda_i * w; the nonzero
/// members are exactly the eigenvectors of eigenvalue lambda.
Subspace eigenvector_space(const Pencil& p, const ProjectivePoint& lambda);

/// The eigenvector classes, enumerated eigenvalue by eigenvalue and sorted
/// lexicographically. Prime fields only.
std::vector<ProjectivePoint> eigenvector_variety(const Pencil& p, const EnumOptions& opts = {});

/// Independent check: scans every point of P(F_q^a) with the rank test.
std::vector<ProjectivePoint> eigenvector_variety_oracle(const Pencil& p,
                                                        const EnumOptions& opts = {});

/// The eigenvalues with nonzero eigenvector space, sorted.
std::vector<ProjectivePoint> eigenvalue_set(const Pencil& p,
                                            const EigenvalueSource& source = EigenvalueSource::all(),
                                            const EnumOptions& opts = {});

/// True iff the eigenvectors with eigenvalue in the source span k^a.
bool has_sufficiently_many(const Pencil& p,
                           const EigenvalueSource& source = EigenvalueSource::all(),
                           const EnumOptions& opts = {});

struct BristleSum {
  Subspace vertex1;  // sum of the eigenvector spaces
  Subspace vertex2;  // sum of the images alpha_i(vertex1)
};

/// The largest submodule generated by bristles with eigenvalue in the source.
BristleSum bristle_sum_submodule(const Pencil& p,
                                 const EigenvalueSource& source = EigenvalueSource::all(),
                                 const EnumOptions& opts = {});

}  // namespace pencil
