#include "pencil/field.hpp"

#include <cctype>
#include <ostream>

namespace pencil {

namespace {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// Canonical residue of a signed big integer mod p.
std::uint64_t residue_of_mpz(const mpz_class& z, std::uint32_t p) {
  return mpz_fdiv_ui(z.get_mpz_t(), p);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p < 2 || p >= (1u << 31) || !is_prime_u32(p))
    fail(errc::invalid_parameter, "not a prime modulus in [2, 2^31): " + std::to_string(p));
  return Field(p);
}

std::uint32_t Field::modulus() const {
  if (!is_prime_field()) fail(errc::invalid_parameter, "modulus() called on the rational field");
  return p_;
}

std::string Field::to_string() const {
  return is_rational() ? "rational" : "gf" + std::to_string(p_);
}

std::optional<Field> Field::parse(std::string_view text) {
  if (text == "rational") return rationals();
  if (text.size() > 2 && text.substr(0, 2) == "gf") {
    std::uint64_t p = 0;
    for (char ch : text.substr(2)) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
      p = p * 10 + static_cast<std::uint64_t>(ch - '0');
      if (p >= (1ull << 31)) return std::nullopt;
    }
    if (p < 2 || !is_prime_u32(static_cast<std::uint32_t>(p))) return std::nullopt;
    return Field(static_cast<std::uint32_t>(p));
  }
  return std::nullopt;
}

Scalar::Scalar(Field field, long value) : field_(field), rep_(std::uint64_t{0}) {
  if (field.is_rational()) {
    rep_ = mpq_class(value);
  } else {
    const std::uint32_t p = field.modulus();
    long r = value % static_cast<long>(p);
    if (r < 0) r += static_cast<long>(p);
    rep_ = static_cast<std::uint64_t>(r);
  }
}

Scalar Scalar::rational(const mpq_class& value) {
  mpq_class v = value;
  v.canonicalize();
  return Scalar(raw_t{}, Field::rationals(), Rep(std::move(v)));
}

Scalar Scalar::residue(Field field, std::uint64_t value) {
  return Scalar(raw_t{}, field, Rep(value % field.modulus()));
}

bool Scalar::is_zero() const {
  if (field_.is_rational()) return sgn(std::get<mpq_class>(rep_)) == 0;
  return std::get<std::uint64_t>(rep_) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_rational()) return std::get<mpq_class>(rep_) == 1;
  return std::get<std::uint64_t>(rep_) == 1 % field_.modulus();
}

Scalar Scalar::operator+(const Scalar& rhs) const {
  require_same_field(field_, rhs.field_, "scalar addition");
  if (field_.is_rational())
    return Scalar(raw_t{}, field_, Rep(mpq_class(std::get<mpq_class>(rep_) + std::get<mpq_class>(rhs.rep_))));
  const std::uint64_t p = field_.modulus();
  std::uint64_t s = std::get<std::uint64_t>(rep_) + std::get<std::uint64_t>(rhs.rep_);
  if (s >= p) s -= p;
  return Scalar(raw_t{}, field_, Rep(s));
}

Scalar Scalar::operator-(const Scalar& rhs) const { return *this + rhs.negated(); }

Scalar Scalar::operator*(const Scalar& rhs) const {
  require_same_field(field_, rhs.field_, "scalar multiplication");
  if (field_.is_rational())
    return Scalar(raw_t{}, field_, Rep(mpq_class(std::get<mpq_class>(rep_) * std::get<mpq_class>(rhs.rep_))));
  const std::uint64_t p = field_.modulus();
  return Scalar(raw_t{}, field_, Rep((std::get<std::uint64_t>(rep_) * std::get<std::uint64_t>(rhs.rep_)) % p));
}

Scalar Scalar::operator/(const Scalar& rhs) const { return *this * rhs.inverse(); }

Scalar Scalar::negated() const {
  if (field_.is_rational()) return Scalar(raw_t{}, field_, Rep(mpq_class(-std::get<mpq_class>(rep_))));
  const std::uint64_t p = field_.modulus();
  std::uint64_t v = std::get<std::uint64_t>(rep_);
  return Scalar(raw_t{}, field_, Rep(v == 0 ? std::uint64_t{0} : p - v));
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(errc::division_by_zero, "inverse of zero");
  if (field_.is_rational())
    return Scalar(raw_t{}, field_, Rep(mpq_class(1 / std::get<mpq_class>(rep_))));
  // Extended Euclid on (v, p).
  std::int64_t p = field_.modulus();
  std::int64_t a = static_cast<std::int64_t>(std::get<std::uint64_t>(rep_)), m = p;
  std::int64_t x = 1, y = 0;
  while (a > 1) {
    std::int64_t q = a / m;
    a -= q * m;
    std::swap(a, m);
    x -= q * y;
    std::swap(x, y);
  }
  if (x < 0) x += p;
  return Scalar(raw_t{}, field_, Rep(static_cast<std::uint64_t>(x)));
}

bool Scalar::operator==(const Scalar& rhs) const {
  if (!(field_ == rhs.field_)) return false;
  if (field_.is_rational()) return std::get<mpq_class>(rep_) == std::get<mpq_class>(rhs.rep_);
  return std::get<std::uint64_t>(rep_) == std::get<std::uint64_t>(rhs.rep_);
}

int Scalar::compare(const Scalar& lhs, const Scalar& rhs) {
  require_same_field(lhs.field_, rhs.field_, "scalar comparison");
  if (lhs.field_.is_rational())
    return cmp(std::get<mpq_class>(lhs.rep_), std::get<mpq_class>(rhs.rep_));
  std::uint64_t a = std::get<std::uint64_t>(lhs.rep_), b = std::get<std::uint64_t>(rhs.rep_);
  return a < b ? -1 : (a > b ? 1 : 0);
}

std::string Scalar::to_string() const {
  if (field_.is_prime_field()) return std::to_string(std::get<std::uint64_t>(rep_));
  const mpq_class& q = std::get<mpq_class>(rep_);
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Scalar Scalar::parse(Field field, std::string_view text) {
  auto bad = [&]() -> Scalar {
    fail(errc::invalid_scalar, "malformed scalar literal: '" + std::string(text) + "'");
  };
  auto parse_int = [&](std::string_view s) -> mpz_class {
    if (s.empty()) bad();
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) bad();
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) bad();
    return mpz_class(std::string(s), 10);
  };

  std::string_view num = text, den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  mpz_class n = parse_int(num);
  mpz_class d = den.data() == nullptr ? mpz_class(1) : parse_int(den);
  if (d == 0) fail(errc::division_by_zero, "zero denominator in scalar literal");

  if (field.is_rational()) {
    mpq_class q(n, d);
    q.canonicalize();
    return Scalar(raw_t{}, field, Rep(std::move(q)));
  }
  const std::uint32_t p = field.modulus();
  Scalar nn(field, std::uint64_t{residue_of_mpz(n, p)});
  Scalar dd(field, std::uint64_t{residue_of_mpz(d, p)});
  if (dd.is_zero()) fail(errc::division_by_zero, "denominator vanishes mod " + std::to_string(p));
  return nn / dd;
}

std::uint64_t Scalar::residue_value() const { return std::get<std::uint64_t>(rep_); }

const mpq_class& Scalar::rational_value() const { return std::get<mpq_class>(rep_); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace pencil
