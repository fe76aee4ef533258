// Internal element-level arithmetic policies and the shared row-reduction
// template. Prime-field elements are canonical residues in uint64_t with
// Barrett reduction; rational elements are canonical mpq_class values.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "pencil/errors.hpp"

namespace pencil::detail {

struct FpOps {
  using elem = std::uint64_t;

  explicit FpOps(std::uint64_t modulus)
      : p(modulus), magic(~std::uint64_t{0} / modulus) {}

  std::uint64_t p;
  std::uint64_t magic;

  // Valid for x < 2^62; one multiply-high replaces the hardware divide.
  elem reduce(std::uint64_t x) const {
    std::uint64_t q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * magic) >> 64);
    std::uint64_t r = x - q * p;
    while (r >= p) r -= p;
    return r;
  }

  elem zero() const { return 0; }
  elem one() const { return 1 % p; }
  bool is_zero(elem a) const { return a == 0; }
  elem add(elem a, elem b) const {
    elem s = a + b;
    return s >= p ? s - p : s;
  }
  elem sub(elem a, elem b) const { return a >= b ? a - b : a + p - b; }
  elem neg(elem a) const { return a == 0 ? 0 : p - a; }
  elem mul(elem a, elem b) const { return reduce(a * b); }
  // a + c*b with a, b, c canonical; fits in 2^62 since p < 2^31.
  elem muladd(elem a, elem c, elem b) const { return reduce(a + c * b); }
  elem inv(elem a) const {
    if (a == 0) fail(errc::division_by_zero, "inverse of zero residue");
    std::int64_t v = static_cast<std::int64_t>(a), m = static_cast<std::int64_t>(p);
    std::int64_t x = 1, y = 0;
    while (v > 1) {
      std::int64_t q = v / m;
      v -= q * m;
      std::swap(v, m);
      x -= q * y;
      std::swap(x, y);
    }
    if (x < 0) x += static_cast<std::int64_t>(p);
    return static_cast<elem>(x);
  }
};

struct RatOps {
  using elem = mpq_class;

  elem zero() const { return mpq_class(0); }
  elem one() const { return mpq_class(1); }
  bool is_zero(const elem& a) const { return sgn(a) == 0; }
  elem add(const elem& a, const elem& b) const { return a + b; }
  elem sub(const elem& a, const elem& b) const { return a - b; }
  elem neg(const elem& a) const { return -a; }
  elem mul(const elem& a, const elem& b) const { return a * b; }
  elem muladd(const elem& a, const elem& c, const elem& b) const { return a + c * b; }
  elem inv(const elem& a) const {
    if (sgn(a) == 0) fail(errc::division_by_zero, "inverse of zero");
    return 1 / a;
  }
};

// In-place Gauss-Jordan; pivot = first nonzero entry in column order.
// Returns the strictly increasing pivot column list.
template <class Ops>
std::vector<std::size_t> rref_in_place(std::vector<typename Ops::elem>& a, std::size_t rows,
                                       std::size_t cols, const Ops& ops) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (!ops.is_zero(a[i * cols + c])) {
        pr = i;
        break;
      }
    }
    if (pr == rows) continue;
    if (pr != r)
      for (std::size_t k = c; k < cols; ++k) std::swap(a[pr * cols + k], a[r * cols + k]);

    typename Ops::elem pivot_inv = ops.inv(a[r * cols + c]);
    for (std::size_t k = c; k < cols; ++k) a[r * cols + k] = ops.mul(a[r * cols + k], pivot_inv);

    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const typename Ops::elem& f = a[i * cols + c];
      if (ops.is_zero(f)) continue;
      typename Ops::elem fn = ops.neg(f);
      const std::size_t src = r * cols, dst = i * cols;
      for (std::size_t k = c; k < cols; ++k)
        a[dst + k] = ops.muladd(a[dst + k], fn, a[src + k]);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace pencil::detail
