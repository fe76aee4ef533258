#include "pencil/reflect.hpp"

namespace pencil {

std::vector<ProjectivePoint> e0_set(std::size_t n, Field field) {
  if (n < 3)
    fail(errc::unsupported_parameter, "the E0 eigenvalue set needs n >= 3 (its classes collide "
                                      "for n = 2)");
  Scalar zero = Scalar::zero(field), one = Scalar::one(field);
  auto unit = [&](std::size_t i) {
    std::vector<Scalar> v(n, zero);
    v[i] = one;
    return v;
  };
  auto unit_pair = [&](std::size_t i, std::size_t j) {
    std::vector<Scalar> v(n, zero);
    v[i] = one;
    v[j] = one;
    return v;
  };
  std::vector<ProjectivePoint> out;
  out.reserve(n + 2);
  out.emplace_back(unit(n - 2));
  out.emplace_back(unit(n - 1));
  for (std::size_t i = 0; i + 1 < n; ++i) out.emplace_back(unit_pair(i, i + 1));
  out.emplace_back(unit_pair(0, n - 1));
  return out;
}

Pencil sigma(const Pencil& p) {
  const std::size_t n = p.map_count(), a = p.source_dim();
  Subspace u = kernel(p.combined());
  const std::size_t z = u.dim();
  Pencil out(p.field(), n, z, a);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix omega(p.field(), a, z);
    for (std::size_t k = 0; k < z; ++k)
      for (std::size_t r = 0; r < a; ++r) omega.set(r, k, u.basis().at(k, i * a + r));
    out.set_map(i, std::move(omega));
  }
  return out;
}

Pencil sigma_minus(const Pencil& p) {
  const std::size_t n = p.map_count(), b = p.target_dim();
  Subspace image = column_space(p.stacked());
  const std::size_t nb = n * b, r = image.dim();

  std::vector<std::size_t> pivot_row(nb, nb);  // column -> image basis row
  for (std::size_t k = 0; k < r; ++k) pivot_row[image.pivots()[k]] = k;
  std::vector<std::size_t> nonpivot;
  nonpivot.reserve(nb - r);
  for (std::size_t c = 0; c < nb; ++c)
    if (pivot_row[c] == nb) nonpivot.push_back(c);

  Pencil out(p.field(), n, b, nb - r);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix omega(p.field(), nb - r, b);
    for (std::size_t j = 0; j < b; ++j) {
      const std::size_t col = i * b + j;
      if (pivot_row[col] == nb) {
        // e_col is its own representative; a single quotient coordinate.
        for (std::size_t idx = 0; idx < nonpivot.size(); ++idx)
          if (nonpivot[idx] == col) omega.set(idx, j, Scalar::one(p.field()));
      } else {
        const std::size_t k = pivot_row[col];
        for (std::size_t idx = 0; idx < nonpivot.size(); ++idx)
          omega.set(idx, j, image.basis().at(k, nonpivot[idx]).negated());
      }
    }
    out.set_map(i, std::move(omega));
  }
  return out;
}

std::string OrbitReport::serialize() const {
  std::string out;
  for (const OrbitRow& row : rows) {
    out += "t=" + std::to_string(row.t) + " dim=" + row.dim.to_string() + " e0=";
    switch (row.e0) {
      case OrbitRow::E0::yes: out += "yes"; break;
      case OrbitRow::E0::no: out += "no"; break;
      case OrbitRow::E0::skipped: out += "skipped"; break;
    }
    out += "\n";
  }
  out += "first_sufficient_t=";
  out += first_sufficient ? std::to_string(*first_sufficient) : std::string("none");
  out += "\n";
  return out;
}

namespace {

OrbitRow test_iterate(const Pencil& iterate, std::size_t t, bool track_e0, bool track_full,
                      const std::vector<ProjectivePoint>* e0, const EnumOptions& opts) {
  OrbitRow row;
  row.t = t;
  row.dim = iterate.dim();
  if (!track_e0 && !track_full) return row;
  ReducedDecomposition rd = reduced_decomposition(iterate);
  row.dropped_simples = rd.simple_count;
  if (track_e0 && e0) {
    bool ok = has_sufficiently_many(rd.reduced, EigenvalueSource::list(*e0), opts);
    row.e0 = ok ? OrbitRow::E0::yes : OrbitRow::E0::no;
  }
  if (track_full)
    row.fully_sufficient = has_sufficiently_many(rd.reduced, EigenvalueSource::all(), opts);
  return row;
}

std::pair<Pencil, OrbitReport> iterate_impl(const Pencil& p, std::size_t t, SigmaDirection dir,
                                            bool track_e0, bool track_full,
                                            const EnumOptions& opts) {
  const bool can_track = track_e0 && p.field().is_prime_field() && p.map_count() >= 3;
  const bool can_track_full = track_full && p.field().is_prime_field();
  std::optional<std::vector<ProjectivePoint>> e0;
  if (can_track) e0 = e0_set(p.map_count(), p.field());

  OrbitReport report;
  Pencil current = p;
  for (std::size_t step = 0;; ++step) {
    OrbitRow row =
        test_iterate(current, step, can_track, can_track_full, e0 ? &*e0 : nullptr, opts);
    report.rows.push_back(row);
    if (row.e0 == OrbitRow::E0::yes && !report.first_sufficient) report.first_sufficient = step;
    if (step == t) break;
    if (current.dim() == DimVec{0, 0}) break;  // fixed point of both functors
    current = dir == SigmaDirection::forward ? sigma(current) : sigma_minus(current);
  }
  return {std::move(current), std::move(report)};
}

}  // namespace

std::pair<Pencil, OrbitReport> sigma_iterate(const Pencil& p, std::size_t t, SigmaDirection dir,
                                             bool track_e0, bool track_full,
                                             const EnumOptions& opts) {
  return iterate_impl(p, t, dir, track_e0, track_full, opts);
}

std::vector<DimVec> preprojective_dimvecs(std::size_t n, std::size_t count) {
  if (n < 2) fail(errc::unsupported_parameter, "the preprojective series needs n >= 2");
  std::vector<DimVec> out;
  out.reserve(count);
  std::uint64_t a = 0, b = 1;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(DimVec{static_cast<std::size_t>(a), static_cast<std::size_t>(b)});
    unsigned __int128 next = static_cast<unsigned __int128>(n) * b - a;
    if (next > (std::uint64_t{1} << 31))
      fail(errc::enumeration_too_large, "preprojective dimension vectors exceed 2^31");
    std::uint64_t na = b;
    b = static_cast<std::uint64_t>(next);
    a = na;
  }
  return out;
}

std::vector<Pencil> build_preprojectives(std::size_t n, std::size_t count, Field field) {
  if (n < 2) fail(errc::unsupported_parameter, "the preprojective series needs n >= 2");
  std::vector<Pencil> out;
  out.reserve(count);
  if (count == 0) return out;
  out.push_back(Pencil::simple(2, n, field));
  for (std::size_t i = 1; i < count; ++i) out.push_back(sigma_minus(out.back()));
  return out;
}

OrbitReport saturation_harness(const Pencil& p, std::size_t t_max, const EnumOptions& opts) {
  if (p.map_count() < 3)
    fail(errc::unsupported_parameter,
         "the saturation harness needs n >= 3; it fails for matrix pairs");
  if (!p.field().is_prime_field())
    fail(errc::enumeration_unsupported, "the saturation harness requires a prime field");
  return iterate_impl(p, t_max, SigmaDirection::forward, true, false, opts).second;
}

}  // namespace pencil
