#include <doctest.h>

#include "pencil/canonical.hpp"
#include "pencil/eigen.hpp"
#include "test_util.hpp"

using namespace tu;

TEST_SUITE("canonical") {

TEST_CASE("pair indexing") {
  CHECK(pair_count(3) == 6);
  CHECK(pair_index(0, 0, 3) == 0);
  CHECK(pair_index(0, 2, 3) == 2);
  CHECK(pair_index(1, 1, 3) == 3);
  CHECK(pair_index(2, 2, 3) == 5);
  CHECK(pair_index(2, 1, 3) == pair_index(1, 2, 3));
  for (std::size_t k = 0; k < pair_count(4); ++k) {
    auto [i, j] = pair_at(k, 4);
    CHECK(pair_index(i, j, 4) == k);
  }
}

TEST_CASE("smallest canonical module is the unique bristle") {
  CanonicalModule c = build_canonical(1, gf5);
  CHECK(c.pencil.dim() == DimVec{1, 1});
  CHECK(c.pencil.map(0) == mat(gf5, {{1}}));
  CHECK_THROWS_AS(build_canonical(0, gf5), Error);
}

TEST_CASE("canonical module for n=2") {
  CanonicalModule c = build_canonical(2, gf3);
  CHECK(c.pencil.dim() == DimVec{3, 2});
  // Pair order (00),(01),(11): the first map hits c_1 from c_11 and c_12.
  CHECK(c.pencil.map(0) == mat(gf3, {{1, 0, 0}, {0, 1, 0}}));
  CHECK(c.pencil.map(1) == mat(gf3, {{0, 1, 0}, {0, 0, 1}}));
  CHECK(is_reduced(c.pencil));
}

TEST_CASE("canonical module for n=3 matches the arrow rule") {
  CanonicalModule c = build_canonical(3, gf7);
  CHECK(c.pencil.dim() == DimVec{6, 3});
  auto column = [&](std::size_t map, std::size_t i, std::size_t j) {
    std::vector<Scalar> col;
    for (std::size_t r = 0; r < 3; ++r) col.push_back(c.pencil.map(map).at(r, pair_index(i, j, 3)));
    return col;
  };
  CHECK(column(0, 0, 2) == vec(gf7, {0, 0, 1}));  // alpha_1(c_13) = c_3
  CHECK(column(2, 0, 2) == vec(gf7, {1, 0, 0}));  // alpha_3(c_13) = c_1
  CHECK(column(1, 0, 2) == vec(gf7, {0, 0, 0}));
  CHECK(column(1, 1, 1) == vec(gf7, {0, 1, 0}));  // alpha_2(c_22) = c_2
}

TEST_CASE("veronese lift basics") {
  // d(e_i) = c_ii and d(e_i + e_j) = c_ii + c_ij + c_jj.
  std::vector<Scalar> e1 = vec(gf5, {1, 0, 0});
  std::vector<Scalar> lift = veronese(e1);
  CHECK(lift == vec(gf5, {1, 0, 0, 0, 0, 0}));
  CHECK(veronese(vec(gf5, {0, 1, 1})) == vec(gf5, {0, 0, 0, 1, 1, 1}));
  CHECK(veronese(vec(gf5, {0, 0, 0})) == vec(gf5, {0, 0, 0, 0, 0, 0}));
}

TEST_CASE("maps act on the veronese lift by coordinate scaling") {
  Rng rng(71);
  for (int i = 0; i < 12; ++i) {
    Field f = (i % 2 == 0) ? gf7 : rat;
    const std::size_t n = 1 + rng.index(4);
    CanonicalModule c = build_canonical(n, f);
    std::vector<Scalar> point;
    for (std::size_t k = 0; k < n; ++k) point.push_back(random_scalar(rng, f));
    std::vector<Scalar> lift = veronese(point);
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<Scalar> image = matvec(c.pencil.map(r), lift);
      for (std::size_t k = 0; k < n; ++k) CHECK(image[k] == point[r] * point[k]);
    }
  }
}

TEST_CASE("quadratic functionals") {
  // A monomial picks out exactly one coefficient.
  std::vector<Scalar> coeffs(pair_count(3), Scalar::zero(gf5));
  coeffs[pair_index(0, 2, 3)] = Scalar::one(gf5);
  QuadraticForm monomial(3, coeffs);
  Matrix functional = quad_to_functional(monomial);
  CHECK(functional.rows() == 1);
  CHECK(functional.cols() == 6);
  CHECK(functional.at(0, pair_index(0, 2, 3)).is_one());

  QuadraticForm zero(3, std::vector<Scalar>(6, Scalar::zero(gf5)));
  CHECK(quad_to_functional(zero).is_zero());

  Rng rng(73);
  for (int i = 0; i < 10; ++i) {
    QuadraticForm a = random_quadrics(rng, gf5, 3, 1).front();
    QuadraticForm b = random_quadrics(rng, gf5, 3, 1).front();
    std::vector<Scalar> sum_coeffs;
    for (std::size_t k = 0; k < 6; ++k) sum_coeffs.push_back(a.coeffs()[k] + b.coeffs()[k]);
    QuadraticForm s(3, sum_coeffs);
    Matrix expect(gf5, 1, 6);
    for (std::size_t k = 0; k < 6; ++k)
      expect.set(0, k, quad_to_functional(a).at(0, k) + quad_to_functional(b).at(0, k));
    CHECK(quad_to_functional(s) == expect);
  }
}

TEST_CASE("evaluation and the functional agree through the veronese lift") {
  std::vector<Scalar> coeffs(pair_count(2), Scalar::zero(gf7));
  coeffs[pair_index(0, 1, 2)] = Scalar::one(gf7);
  QuadraticForm x1x2(2, coeffs);
  CHECK(x1x2.eval(vec(gf7, {1, 1})).is_one());
  CHECK(x1x2.eval(vec(gf7, {0, 0})).is_zero());

  Rng rng(79);
  for (int i = 0; i < 60; ++i) {
    Field f = (i % 2 == 0) ? gf3 : rat;
    const std::size_t n = 1 + rng.index(4);
    QuadraticForm q = random_quadrics(rng, f, n, 1).front();
    std::vector<Scalar> point;
    for (std::size_t k = 0; k < n; ++k) point.push_back(random_scalar(rng, f));
    CHECK(q.eval(point) == matvec(quad_to_functional(q), veronese(point)).front());
  }
}

TEST_CASE("three-vertex extension is consistent") {
  CHECK(beilinson_check(1, gf3));
  CHECK(beilinson_check(2, gf3));
  CHECK(beilinson_check(4, gf7));
  CHECK(beilinson_check(3, rat));
}

TEST_CASE("unique bristle per socle line") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (Field f : {gf2, gf3}) {
      CanonicalModule c = build_canonical(n, f);
      for (const auto& lambda : all_projective_points(f, n, 1000)) {
        Subspace space = eigenvector_space(c.pencil, lambda);
        CHECK(space.dim() == 1);
        CHECK(space.contains(veronese(lambda.coords())));
      }
    }
  }
}

TEST_CASE("endomorphisms and bristle homs stay one-dimensional") {
  for (std::size_t n = 1; n <= 4; ++n)
    CHECK(hom_dim(build_canonical(n, gf7).pencil, build_canonical(n, gf7).pencil) == 1);
  for (std::size_t n = 1; n <= 3; ++n)
    CHECK(hom_dim(build_canonical(n, rat).pencil, build_canonical(n, rat).pencil) == 1);
  CanonicalModule c = build_canonical(3, gf2);
  for (const auto& lambda : all_projective_points(gf2, 3, 100))
    CHECK(hom_dim(Pencil::bristle(lambda), c.pencil) == 1);
}

TEST_CASE("the listed bristles generate the module") {
  // Lifts of e_i and e_i + e_j span vertex 1; their images span vertex 2.
  for (std::size_t n : {std::size_t{2}, std::size_t{3}, std::size_t{4}}) {
    CanonicalModule c = build_canonical(n, gf5);
    const std::size_t N = pair_count(n);
    Matrix lifts(gf5, N, N);
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<long> e(n, 0);
      e[i] = 1;
      lifts.set_row(row++, veronese(vec(gf5, e)));
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        std::vector<long> e(n, 0);
        e[i] = 1;
        e[j] = 1;
        lifts.set_row(row++, veronese(vec(gf5, e)));
      }
    REQUIRE(row == N);
    Subspace vertex1 = Subspace::row_span(lifts);
    CHECK(vertex1.is_full());

    Matrix images(gf5, n * N, n);
    for (std::size_t k = 0; k < N; ++k)
      for (std::size_t i = 0; i < n; ++i)
        images.set_row(i * N + k, matvec(c.pencil.map(i), lifts.row(k)));
    CHECK(Subspace::row_span(images).is_full());
  }
}

TEST_CASE("veronese is injective on projective points") {
  Rng rng(83);
  for (int i = 0; i < 30; ++i) {
    Field f = (i % 2 == 0) ? gf3 : rat;
    const std::size_t n = 2 + rng.index(3);
    ProjectivePoint x = random_projective_point(rng, f, n);
    ProjectivePoint y = random_projective_point(rng, f, n);
    ProjectivePoint dx{veronese(x.coords())}, dy{veronese(y.coords())};
    CHECK((x == y) == (dx == dy));
  }
}

}  // TEST_SUITE
