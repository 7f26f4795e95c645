#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "qplex/doc.hpp"

namespace {

std::string g_cli;

int run(const std::string& args) {
  const std::string cmd = g_cli + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

std::string tmp(const std::string& name) {
  return std::string("/tmp/qplex_cli_test_") + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("params reports the family constants") {
  CHECK(run("params --dim 3") == 0);
  CHECK(run("params --n 9 --alpha 4") == 0);
}

TEST_CASE("sic find, save and verify") {
  const std::string fid = tmp("fid.json");
  CHECK(run("sic find --dim 3 --seed 11 --tol 1e-13 --out " + fid) == 0);
  CHECK(run("sic verify --in " + fid + " --tol 1e-9") == 0);
  std::remove(fid.c_str());
}

TEST_CASE("sic quasi runs the defining-equation checks") {
  CHECK(run("sic quasi --dim 4") == 0);
}

TEST_CASE("rep to-prob then to-op round trip") {
  const std::string fid = tmp("fid2.json");
  const std::string prob = tmp("prob.json");
  REQUIRE(run("sic find --dim 2 --seed 3 --tol 1e-13 --out " + fid) == 0);
  CHECK(run("rep to-prob --dim 2 --seed 5 --sic " + fid + " --out " + prob) ==
        0);
  CHECK(run("rep to-op --in " + prob + " --sic " + fid) == 0);
  CHECK(run("rep evolve --in " + prob + " --seed 5 --sic " + fid) == 0);
  std::remove(fid.c_str());
  std::remove(prob.c_str());
}

TEST_CASE("rep urgleichung applies and rejects mismatched dimensions") {
  using namespace qplex;
  const std::string fid2 = tmp("fid_d2.json");
  const std::string prob2 = tmp("prob_d2.json");
  const std::string meas2 = tmp("meas_d2.json");
  const std::string meas3 = tmp("meas_d3.json");
  REQUIRE(run("sic find --dim 2 --seed 3 --tol 1e-13 --out " + fid2) == 0);
  REQUIRE(run("rep to-prob --dim 2 --seed 5 --sic " + fid2 + " --out " +
              prob2) == 0);

  for (int d : {2, 3}) {
    const FiducialSearchResult f = find_sic_fiducial(d, 3, 1e-13, 50);
    REQUIRE(f.fiducial.has_value());
    const SicSystem sys = sic_from_fiducial(*f.fiducial);
    std::vector<HermitianOperator> effects;
    for (const auto& p : sys.projectors)
      effects.emplace_back(Mat(p.mat() / d));
    save_document(measurement_document(povm_to_measurement(effects, sys), d,
                                       make_meta(3, 1e-10)),
                  d == 2 ? meas2 : meas3);
  }

  CHECK(run("rep urgleichung --in " + prob2 + " --meas " + meas2) == 0);
  CHECK(run("rep urgleichung --in " + prob2 + " --meas " + meas3) == 2);
  std::remove(fid2.c_str());
  std::remove(prob2.c_str());
  std::remove(meas2.c_str());
  std::remove(meas3.c_str());
}

TEST_CASE("geom check-germ accepts grown germs") {
  const std::string pts = tmp("germ.json");
  REQUIRE(run("germ grow --dim 2 --seed 9 --max-iter 500 --out " + pts) == 0);
  CHECK(run("geom check-germ --in " + pts) == 0);
  CHECK(run("geom mmd --in " + pts) == 0);
  std::remove(pts.c_str());
}

TEST_CASE("germ lemma passes") {
  CHECK(run("germ lemma --dim 4 --seed 1 --max-iter 2000") == 0);
}

TEST_CASE("sym closure passes on transfer samples") {
  CHECK(run("sym closure --dim 2 --seed 6 --max-iter 8") == 0);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("frobnicate") == 2);
  CHECK(run("sic find") == 2);           // missing --dim
  CHECK(run("rep to-op") == 2);          // missing --in
  CHECK(run("sic verify --in /tmp/qplex_cli_no_such_file.json") == 2);
}

TEST_CASE("identical seeds give byte-identical outputs") {
  const std::string a = tmp("det_a.json");
  const std::string b = tmp("det_b.json");
  REQUIRE(run("sic find --dim 3 --seed 77 --tol 1e-13 --out " + a) == 0);
  REQUIRE(run("sic find --dim 3 --seed 77 --tol 1e-13 --out " + b) == 0);
  CHECK(slurp(a) == slurp(b));
  std::remove(a.c_str());
  std::remove(b.c_str());
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: test_cli [doctest options] <qplex binary>\n");
    return 1;
  }
  g_cli = argv[argc - 1];
  doctest::Context ctx;
  ctx.applyCommandLine(argc - 1, argv);
  return ctx.run();
}
