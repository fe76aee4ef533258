#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pencil {

enum class errc {
  dimension_mismatch,
  field_mismatch,
  invalid_scalar,
  division_by_zero,
  invalid_projective_point,
  reducedness_required,
  enumeration_unsupported,
  enumeration_too_large,
  explicit_eigenvalues_required,
  not_an_eigenvector,
  invalid_witness,
  invalid_parameter,
  unsupported_parameter,
  internal_invariant,
  format,
};

/// Domain error carrying a machine-checkable code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

/// Parse failure in one of the file formats; line numbers are 1-based.
class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::size_t line)
      : Error(errc::format, what + " (line " + std::to_string(line) + ")"), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace pencil
