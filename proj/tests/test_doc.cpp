#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "qplex/doc.hpp"

using namespace qplex;

namespace {

std::string temp_path(const std::string& name) {
  return std::string("/tmp/qplex_doc_test_") + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

SicSystem test_sic(int d) {
  const FiducialSearchResult r = find_sic_fiducial(d, 777, 1e-16, 50);
  REQUIRE(r.fiducial.has_value());
  return sic_from_fiducial(*r.fiducial);
}

}  // namespace

TEST_CASE("doc kind names round trip") {
  for (DocKind k :
       {DocKind::kFiducial, DocKind::kSicSystem, DocKind::kProbVector,
        DocKind::kMeasurement, DocKind::kStretchedMatrix, DocKind::kPointSet,
        DocKind::kReport, DocKind::kParams})
    CHECK(doc_kind_from_string(to_string(k)) == k);
  CHECK_THROWS_AS(doc_kind_from_string("bogus"), Error);
}

TEST_CASE("fiducial round trip is bit exact and re-save is byte identical") {
  const FiducialSearchResult r = find_sic_fiducial(3, 321, 1e-16, 50);
  REQUIRE(r.fiducial.has_value());
  const std::string path = temp_path("fid.json");
  save_document(fiducial_document(*r.fiducial, make_meta(321, 1e-16)), path);

  const Document loaded = load_document(path);
  CHECK(loaded.kind == DocKind::kFiducial);
  CHECK(loaded.dim == 3);
  const SicFiducial back = fiducial_from_document(loaded);
  CHECK((back.vec() - r.fiducial->vec()).norm() == 0.0);

  const std::string path2 = temp_path("fid2.json");
  save_document(fiducial_document(back, loaded.meta), path2);
  CHECK(slurp(path) == slurp(path2));
  std::remove(path.c_str());
  std::remove(path2.c_str());
}

TEST_CASE("sic system document round trips and verifies on load") {
  const SicSystem sys = test_sic(2);
  const std::string path = temp_path("sic.json");
  save_document(sic_system_document(sys, make_meta(777, 1e-16)), path);
  const SicSystem back = sic_system_from_document(load_document(path));
  REQUIRE(back.projectors.size() == sys.projectors.size());
  for (std::size_t i = 0; i < sys.projectors.size(); ++i)
    CHECK((back.projectors[i].mat() - sys.projectors[i].mat()).norm() == 0.0);
  CHECK(verify_sic(back).pass);
  std::remove(path.c_str());
}

TEST_CASE("prob vector document rejects genuine negatives") {
  RVec bad(4);
  bad << 0.5, 0.7, -0.2, 0.0;
  CHECK_THROWS_WITH_AS(
      static_cast<void>(prob_vector_document(bad, 2, make_meta(0, 1e-10))),
      doctest::Contains("entry 2"), Error);

  RVec ok(4);
  ok << 0.25, 0.25, 0.25, 0.25;
  const std::string path = temp_path("prob.json");
  save_document(prob_vector_document(ok, 2, make_meta(0, 1e-10)), path);
  const RVec back = prob_vector_from_document(load_document(path));
  CHECK((back - ok).norm() == 0.0);
  std::remove(path.c_str());
}

TEST_CASE("measurement, stretched, point set and params round trips") {
  const SicSystem sys = test_sic(2);
  const DimensionParams params = DimensionParams::make(2);

  std::vector<HermitianOperator> effects;
  for (const auto& p : sys.projectors)
    effects.emplace_back(Mat(p.mat() / 2.0));
  const MeasurementMatrix m = povm_to_measurement(effects, sys);
  const std::string mp = temp_path("meas.json");
  save_document(measurement_document(m, 2, make_meta(0, 1e-10)), mp);
  const MeasurementMatrix m2 = measurement_from_document(load_document(mp));
  CHECK((m2.mat() - m.mat()).norm() == 0.0);
  std::remove(mp.c_str());

  const StretchedMatrix r =
      stretched_from_unitary(haar_unitary(2, 5), sys, params);
  const std::string sp = temp_path("stretch.json");
  save_document(stretched_document(r, 2, make_meta(5, 1e-9)), sp);
  const StretchedMatrix r2 = stretched_from_document(load_document(sp));
  CHECK(r2.n == r.n);
  CHECK((r2.entries - r.entries).norm() == 0.0);
  std::remove(sp.c_str());

  PointSet set;
  set.dimension = 4;
  const QplexGeometry g = make_geometry(params);
  set.add(g.c, "c");
  set.add(g.basis.col(0), "e1");
  const std::string pp = temp_path("points.json");
  save_document(point_set_document(set, 2, make_meta(0, 1e-10)), pp);
  const PointSet set2 = point_set_from_document(load_document(pp));
  REQUIRE(set2.points.size() == 2);
  CHECK((set2.points[1] - set.points[1]).norm() == 0.0);
  CHECK(set2.labels[0] == "c");
  std::remove(pp.c_str());

  const GeneralParams gp = generalized_params(9, 4.0);
  const std::string gpp = temp_path("params.json");
  save_document(params_document(gp, make_meta(0, 1e-10)), gpp);
  const GeneralParams gp2 = params_from_document(load_document(gpp));
  CHECK(gp2.n == 9);
  CHECK(gp2.alpha == 4.0);
  CHECK(gp2.quantum_u_2l == gp.quantum_u_2l);
  std::remove(gpp.c_str());
}

TEST_CASE("report meta embeds the tolerance and tool version") {
  Json body;
  body["checks"] = Json::array();
  const Document doc = report_document(body, 3, make_meta(42, 1e-8));
  CHECK(doc.meta.at("seed").get<std::uint64_t>() == 42);
  CHECK(doc.meta.at("tolerance").get<double>() == 1e-8);
  CHECK(doc.meta.at("tool_version").get<std::string>() == kToolVersion);
}

TEST_CASE("malformed documents are rejected with diagnostics") {
  const std::string path = temp_path("bad.json");
  {
    std::ofstream out(path);
    out << "{\"dim\": 2, \"data\": {}}\n";  // missing kind
  }
  CHECK_THROWS_AS(load_document(path), Error);
  {
    std::ofstream out(path);
    out << "not json at all\n";
  }
  CHECK_THROWS_AS(load_document(path), Error);
  std::remove(path.c_str());

  CHECK_THROWS_AS(load_document("/tmp/qplex_doc_no_such_file.json"), Error);
}

TEST_CASE("non-finite payloads are rejected") {
  RVec nan_vec = RVec::Constant(4, 0.25);
  nan_vec(1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(
      static_cast<void>(prob_vector_document(nan_vec, 2, make_meta(0, 1e-10))),
      Error);
}
