// Drives the installed CLI binary end to end. Usage: cli_tests <path-to-pencil>

#include <cstdio>
#include <unistd.h>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

std::string g_cli;
fs::path g_dir;
int g_checks = 0;
int g_failures = 0;

void check(bool ok, const std::string& what) {
  ++g_checks;
  if (!ok) {
    ++g_failures;
    std::cerr << "FAIL: " << what << '\n';
  }
}

struct RunResult {
  int code = -1;
  std::string out;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::ostringstream oss;
  oss << in.rdbuf();
  return oss.str();
}

RunResult run(const std::string& args) {
  fs::path out_file = g_dir / "stdout.txt";
  std::string cmd = g_cli + " " + args + " > " + out_file.string() + " 2> " +
                    (g_dir / "stderr.txt").string();
  int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_file);
  return r;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream(path) << content;
}

std::string first_line(const std::string& text) {
  return text.substr(0, text.find('\n'));
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_tests <path-to-pencil-binary>\n";
    return 2;
  }
  g_cli = argv[1];
  g_dir = fs::temp_directory_path() / ("pencil_cli_test_" + std::to_string(getpid()));
  fs::create_directories(g_dir);

  // canonical: golden header and determinism.
  RunResult canonical = run("canonical --n 2 --field gf3");
  check(canonical.code == 0, "canonical exits 0");
  check(first_line(canonical.out) == "pencil 2 3 2 gf3", "canonical header");
  RunResult canonical_again = run("canonical --n 2 --field gf3");
  check(canonical.out == canonical_again.out, "canonical output is byte-identical across runs");

  // realize the conic, then list eigenvalues: 6 lines over gf5.
  fs::path quadrics = g_dir / "conic.quadrics";
  write_file(quadrics, "quadrics 3 1 gf5\n0 0 4 1 0 0\n");
  fs::path conic_pencil = g_dir / "conic.pencil";
  RunResult realize = run("realize --quadrics " + quadrics.string() + " --out " +
                          conic_pencil.string() + " --report - --no-meta");
  check(realize.code == 0, "realize exits 0");
  check(realize.out.find("pencil dim=(5,3) reduced=yes") != std::string::npos,
        "realize reports the (5,3) pencil");
  check(realize.out.find("verified=pass") != std::string::npos, "realize verifies");
  check(first_line(slurp(conic_pencil)) == "pencil 3 5 3 gf5", "realized pencil header");

  RunResult values = run("eigen --pencil " + conic_pencil.string() + " --values");
  check(values.code == 0, "eigen --values exits 0");
  check(first_line(values.out) == "points 3 6 gf5", "conic has 6 eigenvalue lines");

  // eigenvectors restricted to one eigenvalue.
  RunResult restricted =
      run("eigen --pencil " + conic_pencil.string() + " --eigenvalues \"1,1,1\"");
  check(restricted.code == 0, "eigen with an explicit eigenvalue exits 0");
  check(first_line(restricted.out) == "points 5 1 gf5", "one eigenvector class at (1:1:1)");

  // eigenspace basis of the same eigenvalue.
  RunResult space = run("eigenspace --pencil " + conic_pencil.string() + " --lambda \"1,1,1\"");
  check(space.code == 0, "eigenspace exits 0");
  check(first_line(space.out) == "subspace 5 1 gf5", "eigenspace is a line in k^5");

  // squareize the canonical module: (3,2) -> (3,3).
  fs::path c2 = g_dir / "c2.pencil";
  run("canonical --n 2 --field gf3 --out " + c2.string());
  RunResult squared = run("squareize --pencil " + c2.string());
  check(squared.code == 0, "squareize exits 0");
  check(first_line(squared.out) == "pencil 2 3 3 gf3", "squareized header");

  // reflect with tracking.
  fs::path bristle = g_dir / "b1.pencil";
  write_file(bristle, "pencil 3 1 1 gf5\nmatrix 1\n1\nmatrix 2\n0\nmatrix 3\n0\n");
  RunResult reflect = run("reflect --pencil " + bristle.string() + " --t 2 --e0-track --out " +
                          (g_dir / "reflected.pencil").string());
  check(reflect.code == 0, "reflect exits 0");
  check(reflect.out == "t=0 dim=(1,1) e0=no\nt=1 dim=(2,1) e0=yes\nt=2 dim=(5,2) e0=yes\n"
                       "first_sufficient_t=1\n",
        "orbit report matches");
  check(first_line(slurp(g_dir / "reflected.pencil")) == "pencil 3 5 2 gf5",
        "reflected pencil header");

  // preprojective table.
  RunResult pre = run("preprojective --n 2 --count 3 --field gf3 --no-meta");
  check(pre.code == 0, "preprojective exits 0");
  check(pre.out == "preprojective n=2 count=3 field=gf3\n"
                   "i=0 dim=(0,1) identity=ok empty=yes\n"
                   "i=1 dim=(1,2) identity=ok empty=yes\n"
                   "i=2 dim=(2,3) identity=ok empty=yes\n",
        "preprojective table matches");

  // verify agrees with itself and is thread independent.
  RunResult verify1 = run("verify --pencil " + conic_pencil.string() + " --no-meta --threads 1");
  RunResult verify8 = run("verify --pencil " + conic_pencil.string() + " --no-meta --threads 8");
  check(verify1.code == 0, "verify exits 0 on a matching pencil");
  check(verify1.out == "fast=6 oracle=6 match=yes\n", "verify report");
  check(verify1.out == verify8.out, "verify output independent of --threads");

  RunResult eigen1 = run("eigen --pencil " + conic_pencil.string() + " --threads 1");
  RunResult eigen8 = run("eigen --pencil " + conic_pencil.string() + " --threads 8");
  check(eigen1.out == eigen8.out, "eigen output independent of --threads");

  // check suite.
  RunResult suite = run("check --suite reflection");
  check(suite.code == 0, "check --suite reflection exits 0");
  check(suite.out.find("failures=0") != std::string::npos, "reflection suite reports no failures");

  // exit codes: usage, format, domain.
  check(run("bogus-command").code == 1, "unknown command exits 1");
  check(run("canonical --n 2").code == 1, "missing required option exits 1");
  write_file(g_dir / "bad.pencil", "pencil 1 2 1 gf3\nmatrix 1\n1 x\n");
  check(run("eigen --pencil " + (g_dir / "bad.pencil").string()).code == 2,
        "malformed pencil exits 2");
  check(run("eigen --pencil " + (g_dir / "missing.pencil").string()).code == 2,
        "missing file exits 2");
  write_file(g_dir / "rat.pencil", "pencil 2 1 1 rational\nmatrix 1\n1\nmatrix 2\n2\n");
  check(run("eigen --pencil " + (g_dir / "rat.pencil").string()).code == 3,
        "variety enumeration over the rationals exits 3");
  check(run("eigen --pencil " + (g_dir / "rat.pencil").string() +
            " --values --eigenvalues \"1,2\"").code == 0,
        "explicit eigenvalue query over the rationals works");
  write_file(g_dir / "nonred.pencil", "pencil 1 1 1 gf3\nmatrix 1\n0\n");
  check(run("eigen --pencil " + (g_dir / "nonred.pencil").string()).code == 3,
        "non-reduced input exits 3");
  check(run("reflect --pencil " + (g_dir / "nonred.pencil").string() + " --t 1").code == 0,
        "reflection does not need reducedness");
  write_file(g_dir / "pair.pencil",
             "pencil 2 2 2 gf3\nmatrix 1\n1 0\n0 1\nmatrix 2\n1 1\n0 1\n");
  check(run("reflect --pencil " + (g_dir / "pair.pencil").string() + " --t 1 --e0-track").code == 3,
        "e0 tracking on a matrix pair exits 3");
  check(run("reflect --pencil " + (g_dir / "pair.pencil").string() + " --t 1").code == 0,
        "plain reflection of a matrix pair works");

  // Budget controls: the flag and the environment variable both cap the scan.
  check(run("--budget 2 verify --pencil " + conic_pencil.string()).code == 3,
        "tiny --budget makes the oracle scan exit 3");
  {
    fs::path out_file = g_dir / "env.txt";
    std::string cmd = "PENCIL_ENUM_BUDGET=2 " + g_cli + " verify --pencil " +
                      conic_pencil.string() + " > " + out_file.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    check(WIFEXITED(status) && WEXITSTATUS(status) == 3,
          "tiny PENCIL_ENUM_BUDGET makes the oracle scan exit 3");
  }

  std::cout << "cli_tests: " << (g_checks - g_failures) << "/" << g_checks << " checks passed\n";
  fs::remove_all(g_dir);
  return g_failures == 0 ? 0 : 1;
}
