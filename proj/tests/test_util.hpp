#pragma once

#include "pencil/io.hpp"
#include "pencil/random.hpp"

namespace tu {

using namespace pencil;

inline Matrix mat(Field f, const std::vector<std::vector<long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, Scalar(f, rows[i][j]));
  return m;
}

inline std::vector<Scalar> vec(Field f, const std::vector<long>& values) {
  std::vector<Scalar> out;
  out.reserve(values.size());
  for (long v : values) out.emplace_back(f, v);
  return out;
}

inline ProjectivePoint pt(Field f, const std::vector<long>& values) {
  return ProjectivePoint(vec(f, values));
}

inline Pencil pencil_of(Field f, const std::vector<std::vector<std::vector<long>>>& maps) {
  std::vector<Matrix> ms;
  ms.reserve(maps.size());
  for (const auto& rows : maps) ms.push_back(mat(f, rows));
  return Pencil(std::move(ms));
}

inline Subspace line(Field f, const std::vector<long>& v) {
  Matrix m(f, 1, v.size());
  m.set_row(0, vec(f, v));
  return Subspace::row_span(m);
}

inline const Field gf2 = Field::prime(2);
inline const Field gf3 = Field::prime(3);
inline const Field gf5 = Field::prime(5);
inline const Field gf7 = Field::prime(7);
inline const Field rat = Field::rationals();

}  // namespace tu
