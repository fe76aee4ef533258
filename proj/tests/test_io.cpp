#include <doctest.h>

#include "pencil/suites.hpp"
#include "test_util.hpp"

#include <sstream>

using namespace tu;

TEST_SUITE("io") {

TEST_CASE("golden pencil file for the canonical module") {
  CanonicalModule c = build_canonical(2, gf3);
  CHECK(pencil_to_string(c.pencil) ==
        "pencil 2 3 2 gf3\n"
        "matrix 1\n"
        "1 0 0\n"
        "0 1 0\n"
        "matrix 2\n"
        "0 1 0\n"
        "0 0 1\n");
}

TEST_CASE("comments and blank lines are ignored") {
  const char* text =
      "# a pencil with remarks\n"
      "pencil 2 2 1 gf5   # header\n"
      "\n"
      "matrix 1\n"
      "1 2  # row\n"
      "matrix 2\n"
      "\n"
      "3 4\n";
  Pencil p = pencil_from_string(text);
  CHECK(p.dim() == DimVec{2, 1});
  CHECK(p.map(1) == mat(gf5, {{3, 4}}));
}

TEST_CASE("zero-dimensional shapes round-trip") {
  for (const Pencil& p : {Pencil::simple(1, 2, gf3), Pencil::simple(2, 2, gf3),
                          Pencil(gf3, 3, 0, 0), Pencil(rat, 1, 0, 2), Pencil(rat, 1, 2, 0)}) {
    CHECK(pencil_from_string(pencil_to_string(p)) == p);
  }
}

TEST_CASE("format errors carry line numbers") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      pencil_from_string(text);
    } catch (const FormatError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("nonsense 1 1 1 gf3\n") == 1);
  CHECK(line_of("pencil 1 2 1 gf4\nmatrix 1\n1 2\n") == 1);
  CHECK(line_of("pencil 1 2 1 gf3\nmatrix 1\n1 2 3\n") == 3);      // too many entries
  CHECK(line_of("pencil 1 2 1 gf3\nmatrix 1\n1 x\n") == 3);        // bad literal
  CHECK(line_of("pencil 1 2 1 gf3\nmatrix 2\n1 2\n") == 2);        // wrong index
  CHECK(line_of("pencil 1 2 1 gf3\nmatrix 1\n1 2\nleftover\n") == 4);
  CHECK(line_of("pencil 0 2 1 gf3\n") == 1);
  CHECK_THROWS_AS(pencil_from_string("pencil 1 2 1 gf3\nmatrix 1\n"), FormatError);
}

TEST_CASE("quadrics files round-trip") {
  Rng rng(109);
  for (Field f : {gf5, rat}) {
    for (int i = 0; i < 10; ++i) {
      QuadricsFile file;
      file.vars = 1 + rng.index(4);
      file.field = f;
      file.forms = random_quadrics(rng, f, file.vars, rng.index(4));
      std::string text = quadrics_to_string(file);
      QuadricsFile back = quadrics_from_string(text);
      CHECK(back.vars == file.vars);
      CHECK(back.field == file.field);
      CHECK(back.forms == file.forms);
      CHECK(quadrics_to_string(back) == text);
    }
  }
}

TEST_CASE("points files round-trip and normalize") {
  PointsFile file;
  file.coord_count = 3;
  file.field = gf5;
  file.points = {pt(gf5, {0, 2, 4}), pt(gf5, {1, 3, 0})};
  std::string text = points_to_string(file);
  CHECK(text ==
        "points 3 2 gf5\n"
        "0 1 2\n"  // (0,2,4) normalized by 2^-1 = 3
        "1 3 0\n");
  PointsFile back = points_from_string(text);
  CHECK(back.points == file.points);
  CHECK_THROWS_AS(points_from_string("points 2 1 gf3\n0 0\n"), FormatError);
}

TEST_CASE("subspace listing") {
  Subspace s = Subspace::row_span(mat(gf5, {{2, 0, 1}, {0, 1, 0}}));
  std::ostringstream oss;
  write_subspace(oss, s);
  CHECK(oss.str() ==
        "subspace 3 2 gf5\n"
        "1 0 3\n"
        "0 1 0\n");
}

TEST_CASE("pencil printing round-trips on random data") {
  Rng rng(113);
  for (Field f : {gf2, gf7, rat}) {
    for (int i = 0; i < 20; ++i) {
      const std::size_t n = 1 + rng.index(3);
      std::vector<Matrix> maps;
      const std::size_t a = rng.index(4), b = rng.index(4);
      for (std::size_t k = 0; k < n; ++k) maps.push_back(random_matrix(rng, f, b, a));
      Pencil p(std::move(maps));
      CHECK(pencil_from_string(pencil_to_string(p)) == p);
    }
  }
}

TEST_CASE("check suites run clean and are thread independent") {
  SuiteOptions opts;
  opts.count = 8;
  std::ostringstream one, four;
  opts.enums = EnumOptions(default_enum_budget(), 1);
  SuiteResult r1 = run_suite("oracle-equivalence", opts, one);
  opts.enums = EnumOptions(default_enum_budget(), 4);
  SuiteResult r4 = run_suite("oracle-equivalence", opts, four);
  CHECK(r1.passed());
  CHECK(r4.passed());
  CHECK(r1.checks == r4.checks);
  CHECK(one.str() == four.str());
  CHECK_THROWS_AS(run_suite("bogus", opts, one), Error);
}

}  // TEST_SUITE
