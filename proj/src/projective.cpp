#include "pencil/projective.hpp"

#include <algorithm>

namespace pencil {

ProjectivePoint::ProjectivePoint(std::vector<Scalar> coords) : coords_(std::move(coords)) {
  if (coords_.empty())
    fail(errc::invalid_projective_point, "projective point needs at least one coordinate");
  for (std::size_t i = 1; i < coords_.size(); ++i)
    require_same_field(coords_[0].field(), coords_[i].field(), "projective point");
  std::size_t lead = coords_.size();
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (!coords_[i].is_zero()) {
      lead = i;
      break;
    }
  }
  if (lead == coords_.size())
    fail(errc::invalid_projective_point, "the zero vector has no projective class");
  if (!coords_[lead].is_one()) {
    Scalar inv = coords_[lead].inverse();
    for (auto& c : coords_) c = c * inv;
  }
}

int ProjectivePoint::compare(const ProjectivePoint& lhs, const ProjectivePoint& rhs) {
  if (lhs.size() != rhs.size())
    fail(errc::dimension_mismatch, "comparing points of different projective spaces");
  for (std::size_t i = 0; i < lhs.size(); ++i)
    if (int c = Scalar::compare(lhs.coords_[i], rhs.coords_[i]); c != 0) return c;
  return 0;
}

std::string ProjectivePoint::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ":";
    out += coords_[i].to_string();
  }
  return out + ")";
}

std::optional<std::uint64_t> projective_point_count(std::uint64_t q, std::size_t m) {
  // 1 + q + ... + q^(m-1), watching for overflow.
  constexpr std::uint64_t limit = std::uint64_t{1} << 62;
  std::uint64_t total = 0, power = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (total > limit - power) return std::nullopt;
    total += power;
    if (i + 1 < m) {
      if (power > limit / q) return std::nullopt;
      power *= q;
    }
  }
  return total;
}

std::vector<Scalar> projective_representative(Field field, std::size_t m, std::uint64_t index) {
  const std::uint64_t q = field.modulus();
  // Block for leading position L holds q^(m-1-L) points.
  std::uint64_t block = 1;
  for (std::size_t i = 0; i + 1 < m; ++i) block *= q;
  std::size_t lead = 0;
  while (index >= block) {
    index -= block;
    block /= q;
    ++lead;
  }
  std::vector<Scalar> coords(m, Scalar::zero(field));
  coords[lead] = Scalar::one(field);
  // Remaining coordinates are the base-q digits of index, most significant first.
  for (std::size_t pos = m; pos > lead + 1; --pos) {
    coords[pos - 1] = Scalar::residue(field, index % q);
    index /= q;
  }
  return coords;
}

std::vector<ProjectivePoint> all_projective_points(Field field, std::size_t m,
                                                   std::uint64_t budget) {
  if (!field.is_prime_field())
    fail(errc::enumeration_unsupported, "projective enumeration requires a prime field");
  auto count = projective_point_count(field.modulus(), m);
  if (!count || *count > budget)
    fail(errc::enumeration_too_large, "projective space P(F_" + std::to_string(field.modulus()) +
                                          "^" + std::to_string(m) + ") exceeds the enumeration budget");
  std::vector<ProjectivePoint> out;
  out.reserve(*count);
  for (std::uint64_t i = 0; i < *count; ++i)
    out.emplace_back(projective_representative(field, m, i));
  return out;
}

std::vector<ProjectivePoint> subspace_projective_points(const Subspace& s, std::uint64_t budget) {
  if (!s.field().is_prime_field())
    fail(errc::enumeration_unsupported, "point enumeration requires a prime field");
  std::vector<ProjectivePoint> out;
  if (s.dim() == 0) return out;
  auto count = projective_point_count(s.field().modulus(), s.dim());
  if (!count || *count > budget)
    fail(errc::enumeration_too_large, "subspace holds too many projective points for the budget");
  out.reserve(*count);
  for (std::uint64_t i = 0; i < *count; ++i) {
    std::vector<Scalar> coeffs = projective_representative(s.field(), s.dim(), i);
    out.emplace_back(s.combination(coeffs));
  }
  return out;
}

void sort_points(std::vector<ProjectivePoint>& points) {
  std::sort(points.begin(), points.end(),
            [](const ProjectivePoint& a, const ProjectivePoint& b) {
              return ProjectivePoint::compare(a, b) < 0;
            });
}

}  // namespace pencil
