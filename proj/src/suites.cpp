#include "pencil/suites.hpp"

#include <ostream>

#include "pencil/random.hpp"
#include "pencil/realize.hpp"
#include "pencil/reflect.hpp"

namespace pencil {

namespace {

struct Logger {
  std::ostream& os;
  SuiteResult result;

  void check(bool ok, const std::string& what) {
    ++result.checks;
    if (!ok) {
      ++result.failures;
      os << "FAIL " << what << '\n';
    }
  }
};

const std::uint32_t kSmallPrimes[] = {2, 3, 5};

SuiteResult oracle_equivalence_suite(const SuiteOptions& opts, std::ostream& os) {
  Logger log{os, {}};
  Rng rng(opts.seed);
  const std::size_t count = opts.count ? opts.count : 100;
  for (std::size_t i = 0; i < count; ++i) {
    Field field = Field::prime(kSmallPrimes[rng.index(3)]);
    Pencil p = random_reduced_pencil(rng, field, 4, 4, 4);
    auto fast = eigenvector_variety(p, opts.enums);
    auto slow = eigenvector_variety_oracle(p, opts.enums);
    log.check(fast == slow, "case " + std::to_string(i) + ": variety != oracle on dim " +
                                p.dim().to_string() + " over " + field.to_string());
  }
  return log.result;
}

SuiteResult canonical_suite(const SuiteOptions& opts, std::ostream& os) {
  Logger log{os, {}};
  Rng rng(opts.seed);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::uint32_t q : kSmallPrimes) {
      Field field = Field::prime(q);
      CanonicalModule c = build_canonical(n, field);
      log.check(is_reduced(c.pencil), "canonical module not reduced");
      log.check(hom_dim(c.pencil, c.pencil) == 1, "End(C) != k for n=" + std::to_string(n));
      for (const auto& lambda : all_projective_points(field, n, opts.enums.budget)) {
        Subspace space = eigenvector_space(c.pencil, lambda);
        Matrix lift(field, 1, pair_count(n));
        lift.set_row(0, veronese(lambda.coords()));
        log.check(space == Subspace::row_span(lift),
                  "eigenvector space != veronese line at " + lambda.to_string());
        log.check(hom_dim(Pencil::bristle(lambda), c.pencil) == 1,
                  "dim Hom(B,C) != 1 at " + lambda.to_string());
      }
    }
  }
  // Functional/evaluation compatibility on random data, both field kinds.
  const std::size_t count = opts.count ? opts.count : 200;
  for (std::size_t i = 0; i < count; ++i) {
    Field field = (i % 2 == 0) ? Field::rationals() : Field::prime(kSmallPrimes[rng.index(3)]);
    const std::size_t n = 1 + rng.index(4);
    QuadraticForm q = random_quadrics(rng, field, n, 1).front();
    std::vector<Scalar> c;
    for (std::size_t k = 0; k < n; ++k) c.push_back(random_scalar(rng, field));
    Scalar via_functional = matvec(quad_to_functional(q), veronese(c)).front();
    log.check(q.eval(c) == via_functional, "q(c) != functional(d(c)) in case " + std::to_string(i));
  }
  for (std::size_t n = 1; n <= 4; ++n)
    log.check(beilinson_check(n, Field::prime(3)), "three-vertex extension check failed");
  return log.result;
}

SuiteResult realization_suite(const SuiteOptions& opts, std::ostream& os) {
  Logger log{os, {}};
  Rng rng(opts.seed);
  const std::size_t count = opts.count ? opts.count : 60;
  for (std::size_t i = 0; i < count; ++i) {
    Field field = Field::prime(kSmallPrimes[rng.index(3)]);
    const std::size_t n = 1 + rng.index(4);
    const std::size_t m = rng.index(5);
    Realization r = realize_variety(n, random_quadrics(rng, field, n, m), field);
    RealizationReport report = verify_realization(r, opts.enums);
    log.check(report.pass, "case " + std::to_string(i) + ": realization disagrees with the " +
                               "direct scan (n=" + std::to_string(n) +
                               ", m=" + std::to_string(m) + ", " + field.to_string() + ")");
  }
  return log.result;
}

SuiteResult reflection_suite(const SuiteOptions& opts, std::ostream& os) {
  Logger log{os, {}};
  for (std::size_t n : {std::size_t{2}, std::size_t{3}}) {
    auto dims = preprojective_dimvecs(n, 5);
    auto series = build_preprojectives(n, 5, Field::prime(3));
    for (std::size_t i = 0; i < series.size(); ++i) {
      log.check(series[i].dim() == dims[i], "preprojective dimension vector mismatch");
      const auto [a, b] = dims[i];
      log.check(a * a + b * b == n * a * b + 1, "preprojective quadratic identity fails");
      log.check(eigenvector_variety(series[i], opts.enums).empty(),
                "preprojective pencil has an eigenvector");
    }
  }
  // sigma^2 dimension arithmetic on the canonical module.
  for (std::size_t n : {std::size_t{2}, std::size_t{3}}) {
    CanonicalModule c = build_canonical(n, Field::prime(5));
    const std::size_t a = c.pencil.source_dim(), b = c.pencil.target_dim();
    Pencil twice = sigma(sigma(c.pencil));
    log.check(twice.dim() == DimVec{(n * n - 1) * a - n * b, n * a - b},
              "sigma^2 dimension formula fails on the canonical module");
  }
  return log.result;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"oracle-equivalence", "canonical", "realization", "reflection"};
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts, std::ostream& log) {
  log << "suite " << name << ": seed=" << opts.seed << '\n';
  SuiteResult result;
  if (name == "oracle-equivalence")
    result = oracle_equivalence_suite(opts, log);
  else if (name == "canonical")
    result = canonical_suite(opts, log);
  else if (name == "realization")
    result = realization_suite(opts, log);
  else if (name == "reflection")
    result = reflection_suite(opts, log);
  else
    fail(errc::invalid_parameter, "unknown suite '" + name + "'");
  log << "suite " << name << ": checks=" << result.checks << " failures=" << result.failures
      << '\n';
  return result;
}

}  // namespace pencil
