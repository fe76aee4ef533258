#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "pencil/errors.hpp"

namespace pencil {

/// Coefficient field descriptor: the rationals, or GF(p) for a prime p < 2^31.
class Field {
 public:
  static Field rationals() { return Field(0); }

  /// Throws errc::invalid_parameter unless 2 <= p < 2^31 and p is prime.
  static Field prime(std::uint32_t p);

  bool is_rational() const { return p_ == 0; }
  bool is_prime_field() const { return p_ != 0; }

  /// The modulus p; only valid for prime fields.
  std::uint32_t modulus() const;

  std::string to_string() const;  // "rational" or "gf<p>"
  static std::optional<Field> parse(std::string_view text);

  bool operator==(const Field&) const = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;  // 0 encodes the rationals
};

/// Exact field element in canonical form: a reduced fraction with positive
/// denominator, or a residue in [0, p-1]. Mixed-field arithmetic throws.
class Scalar {
 public:
  Scalar(Field field, long value);
  static Scalar zero(Field field) { return Scalar(field, 0); }
  static Scalar one(Field field) { return Scalar(field, 1); }
  static Scalar rational(const mpq_class& value);
  static Scalar residue(Field field, std::uint64_t value);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& rhs) const;
  Scalar operator-(const Scalar& rhs) const;
  Scalar operator*(const Scalar& rhs) const;
  Scalar operator/(const Scalar& rhs) const;  // throws errc::division_by_zero
  Scalar negated() const;
  Scalar inverse() const;

  bool operator==(const Scalar& rhs) const;
  bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

  /// Total order used for lexicographic point sorting: residue order on GF(p),
  /// numeric order on the rationals. Returns <0, 0, >0.
  static int compare(const Scalar& lhs, const Scalar& rhs);

  std::string to_string() const;

  /// Parses the scalar literal grammar: `-?[0-9]+` or `-?[0-9]+/-?[0-9]+`
  /// with nonzero denominator. Over GF(p) the literal is reduced mod p.
  static Scalar parse(Field field, std::string_view text);

  std::uint64_t residue_value() const;       // prime fields only
  const mpq_class& rational_value() const;   // rationals only

 private:
  using Rep = std::variant<std::uint64_t, mpq_class>;
  struct raw_t {};
  Scalar(raw_t, Field field, Rep rep) : field_(field), rep_(std::move(rep)) {}

  Field field_;
  Rep rep_;
};

inline void require_same_field(Field lhs, Field rhs, const char* context) {
  if (!(lhs == rhs))
    fail(errc::field_mismatch, std::string(context) + ": operands over different fields (" +
                                   lhs.to_string() + " vs " + rhs.to_string() + ")");
}

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace pencil
