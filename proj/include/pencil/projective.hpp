#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pencil/subspace.hpp"

namespace pencil {

/// Point of a projective space, stored as the unique representative whose
/// first nonzero coordinate is 1.
class ProjectivePoint {
 public:
  explicit ProjectivePoint(std::vector<Scalar> coords);  // throws on the zero vector

  std::size_t size() const { return coords_.size(); }
  Field field() const { return coords_.front().field(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Scalar>& coords() const { return coords_; }

  /// Lexicographic order on normalized coordinates.
  static int compare(const ProjectivePoint& lhs, const ProjectivePoint& rhs);
  bool operator==(const ProjectivePoint& rhs) const { return coords_ == rhs.coords_; }
  bool operator!=(const ProjectivePoint& rhs) const { return !(*this == rhs); }
  bool operator<(const ProjectivePoint& rhs) const { return compare(*this, rhs) < 0; }

  std::string to_string() const;  // "(c1:c2:...:cm)"

 private:
  std::vector<Scalar> coords_;
};

/// |P(F_q^m)| = (q^m - 1)/(q - 1), or nullopt when it exceeds 2^62.
std::optional<std::uint64_t> projective_point_count(std::uint64_t q, std::size_t m);

/// The index-th normalized representative of P(F_q^m), 0 <= index < count.
/// Enumeration is grouped by the position of the leading 1.
std::vector<Scalar> projective_representative(Field field, std::size_t m, std::uint64_t index);

/// All of P(F_q^m); throws errc::enumeration_too_large past the budget and
/// errc::enumeration_unsupported over the rationals. Enumeration order.
std::vector<ProjectivePoint> all_projective_points(Field field, std::size_t m,
                                                   std::uint64_t budget);

/// The projective points lying in a subspace (prime fields only).
std::vector<ProjectivePoint> subspace_projective_points(const Subspace& s, std::uint64_t budget);

void sort_points(std::vector<ProjectivePoint>& points);

}  // namespace pencil
