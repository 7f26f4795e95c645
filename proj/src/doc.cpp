#include "qplex/doc.hpp"

#include <cmath>
#include <fstream>

namespace qplex {

std::string to_string(DocKind kind) {
  switch (kind) {
    case DocKind::kFiducial: return "fiducial";
    case DocKind::kSicSystem: return "sic_system";
    case DocKind::kProbVector: return "prob_vector";
    case DocKind::kMeasurement: return "measurement";
    case DocKind::kStretchedMatrix: return "stretched_matrix";
    case DocKind::kPointSet: return "point_set";
    case DocKind::kReport: return "report";
    case DocKind::kParams: return "params";
  }
  throw Error("unknown document kind");
}

DocKind doc_kind_from_string(const std::string& s) {
  if (s == "fiducial") return DocKind::kFiducial;
  if (s == "sic_system") return DocKind::kSicSystem;
  if (s == "prob_vector") return DocKind::kProbVector;
  if (s == "measurement") return DocKind::kMeasurement;
  if (s == "stretched_matrix") return DocKind::kStretchedMatrix;
  if (s == "point_set") return DocKind::kPointSet;
  if (s == "report") return DocKind::kReport;
  if (s == "params") return DocKind::kParams;
  throw Error("unknown document kind: " + s);
}

namespace {

double checked_number(const Json& j, const std::string& where) {
  if (!j.is_number())
    throw Error("document: expected number at " + where);
  const double v = j.get<double>();
  if (!std::isfinite(v))
    throw Error("document: non-finite number at " + where);
  return v;
}

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2)
    throw Error("document: expected [re, im] pair at " + where);
  return {checked_number(j[0], where), checked_number(j[1], where)};
}

Json cmat_to_json(const Mat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat cmat_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty())
    throw Error("document: expected matrix at " + where);
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j[0].size());
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j[i].size()) != cols)
      throw Error("document: ragged matrix at " + where);
    for (int k = 0; k < cols; ++k)
      m(i, k) = complex_from_json(j[i][k], where);
  }
  return m;
}

Json rmat_to_json(const RMat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

RMat rmat_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty())
    throw Error("document: expected matrix at " + where);
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j[0].size());
  RMat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j[i].size()) != cols)
      throw Error("document: ragged matrix at " + where);
    for (int k = 0; k < cols; ++k)
      m(i, k) = checked_number(j[i][k], where);
  }
  return m;
}

Json rvec_to_json(const RVec& v) {
  Json arr = Json::array();
  for (int i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

RVec rvec_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw Error("document: expected array at " + where);
  RVec v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    v(static_cast<int>(i)) =
        checked_number(j[i], where + "[" + std::to_string(i) + "]");
  return v;
}

}  // namespace

Json make_meta(std::uint64_t seed, double tol) {
  Json meta;
  meta["seed"] = seed;
  meta["tool_version"] = kToolVersion;
  meta["tolerance"] = tol;
  return meta;
}

Document load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("load_document: cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error("load_document: parse error in " + path + ": " + e.what());
  }
  if (!j.contains("kind") || !j.contains("dim") || !j.contains("data"))
    throw Error("load_document: missing kind/dim/data in " + path);
  Document doc;
  doc.kind = doc_kind_from_string(j["kind"].get<std::string>());
  doc.dim = j["dim"].get<int>();
  doc.data = j["data"];
  doc.meta = j.value("meta", Json::object());
  if (doc.dim < 1) throw Error("load_document: dim must be positive");
  return doc;
}

void save_document(const Document& doc, const std::string& path) {
  Json j;
  j["kind"] = to_string(doc.kind);
  j["dim"] = doc.dim;
  j["data"] = doc.data;
  j["meta"] = doc.meta;
  std::ofstream out(path);
  if (!out) throw Error("save_document: cannot open " + path);
  out << j.dump(2) << "\n";
  if (!out) throw Error("save_document: write failure on " + path);
}

Document fiducial_document(const SicFiducial& f, const Json& meta) {
  Document doc;
  doc.kind = DocKind::kFiducial;
  doc.dim = f.dim();
  Json vec = Json::array();
  for (int i = 0; i < f.dim(); ++i) vec.push_back(complex_to_json(f.vec()(i)));
  doc.data["vector"] = std::move(vec);
  doc.meta = meta;
  return doc;
}

SicFiducial fiducial_from_document(const Document& doc) {
  if (doc.kind != DocKind::kFiducial)
    throw Error("expected a fiducial document");
  const Json& vec = doc.data.at("vector");
  if (static_cast<int>(vec.size()) != doc.dim)
    throw Error("fiducial document: vector length != dim");
  CVec v(doc.dim);
  for (int i = 0; i < doc.dim; ++i)
    v(i) = complex_from_json(vec[i], "vector[" + std::to_string(i) + "]");
  return SicFiducial(std::move(v));
}

Document sic_system_document(const SicSystem& s, const Json& meta) {
  Document doc;
  doc.kind = DocKind::kSicSystem;
  doc.dim = s.dim;
  Json projs = Json::array();
  for (const auto& p : s.projectors) projs.push_back(cmat_to_json(p.mat()));
  doc.data["projectors"] = std::move(projs);
  doc.data["provenance"] =
      s.provenance == SicSystem::Provenance::kFiducial ? "fiducial"
                                                       : "explicit";
  doc.meta = meta;
  return doc;
}

SicSystem sic_system_from_document(const Document& doc) {
  if (doc.kind != DocKind::kSicSystem)
    throw Error("expected a sic_system document");
  const Json& projs = doc.data.at("projectors");
  if (static_cast<int>(projs.size()) != doc.dim * doc.dim)
    throw Error("sic_system document: expected d^2 projectors");
  SicSystem s;
  s.dim = doc.dim;
  s.provenance = doc.data.value("provenance", "explicit") == "fiducial"
                     ? SicSystem::Provenance::kFiducial
                     : SicSystem::Provenance::kExplicit;
  for (std::size_t i = 0; i < projs.size(); ++i) {
    Mat m = cmat_from_json(projs[i], "projectors[" + std::to_string(i) + "]");
    if (m.rows() != doc.dim || m.cols() != doc.dim)
      throw Error("sic_system document: projector shape mismatch");
    s.projectors.emplace_back(std::move(m));
  }
  return s;
}

Document prob_vector_document(const RVec& p, int dim, const Json& meta) {
  for (int i = 0; i < p.size(); ++i) {
    if (!std::isfinite(p(i)))
      throw Error("prob_vector document: entry " + std::to_string(i) +
                  " is not finite");
    if (p(i) < -kTolProb)
      throw Error("prob_vector document: entry " + std::to_string(i) + " = " +
                  std::to_string(p(i)) + " is negative");
  }
  Document doc;
  doc.kind = DocKind::kProbVector;
  doc.dim = dim;
  doc.data["entries"] = rvec_to_json(p);
  doc.meta = meta;
  return doc;
}

RVec prob_vector_from_document(const Document& doc) {
  if (doc.kind != DocKind::kProbVector)
    throw Error("expected a prob_vector document");
  RVec p = rvec_from_json(doc.data.at("entries"), "entries");
  if (p.size() != doc.dim * doc.dim)
    throw Error("prob_vector document: expected d^2 entries");
  for (int i = 0; i < p.size(); ++i) {
    if (p(i) < -kTolProb)
      throw Error("prob_vector document: entry " + std::to_string(i) + " = " +
                  std::to_string(p(i)) + " is negative");
  }
  if (std::abs(p.sum() - 1.0) > kTolProb * p.size())
    throw Error("prob_vector document: entries do not sum to 1");
  return p;
}

Document measurement_document(const MeasurementMatrix& r, int dim,
                              const Json& meta) {
  Document doc;
  doc.kind = DocKind::kMeasurement;
  doc.dim = dim;
  doc.data["conditionals"] = rmat_to_json(r.mat());
  doc.meta = meta;
  return doc;
}

MeasurementMatrix measurement_from_document(const Document& doc) {
  if (doc.kind != DocKind::kMeasurement)
    throw Error("expected a measurement document");
  RMat m = rmat_from_json(doc.data.at("conditionals"), "conditionals");
  if (m.cols() != doc.dim * doc.dim)
    throw Error("measurement document: expected d^2 input columns");
  return MeasurementMatrix(std::move(m));
}

Document stretched_document(const StretchedMatrix& r, int dim,
                            const Json& meta) {
  Document doc;
  doc.kind = DocKind::kStretchedMatrix;
  doc.dim = dim;
  doc.data["entries"] = rmat_to_json(r.entries);
  doc.meta = meta;
  return doc;
}

StretchedMatrix stretched_from_document(const Document& doc) {
  if (doc.kind != DocKind::kStretchedMatrix)
    throw Error("expected a stretched_matrix document");
  RMat m = rmat_from_json(doc.data.at("entries"), "entries");
  const int n = doc.dim * doc.dim;
  if (m.rows() != n || m.cols() != n)
    throw Error("stretched_matrix document: expected N x N entries");
  return StretchedMatrix{n, std::move(m)};
}

Document point_set_document(const PointSet& s, int dim, const Json& meta) {
  Document doc;
  doc.kind = DocKind::kPointSet;
  doc.dim = dim;
  Json pts = Json::array();
  for (const auto& p : s.points) pts.push_back(rvec_to_json(p));
  doc.data["points"] = std::move(pts);
  Json labels = Json::array();
  for (const auto& l : s.labels) labels.push_back(l);
  doc.data["labels"] = std::move(labels);
  doc.meta = meta;
  return doc;
}

PointSet point_set_from_document(const Document& doc) {
  if (doc.kind != DocKind::kPointSet)
    throw Error("expected a point_set document");
  PointSet s;
  const Json& pts = doc.data.at("points");
  const int n = doc.dim * doc.dim;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    RVec p = rvec_from_json(pts[i], "points[" + std::to_string(i) + "]");
    if (p.size() != n)
      throw Error("point_set document: point length != d^2");
    s.add(std::move(p));
  }
  if (doc.data.contains("labels")) {
    const Json& labels = doc.data["labels"];
    for (std::size_t i = 0; i < labels.size() && i < s.labels.size(); ++i)
      s.labels[i] = labels[i].get<std::string>();
  }
  return s;
}

Document params_document(const GeneralParams& p, const Json& meta) {
  Document doc;
  doc.kind = DocKind::kParams;
  doc.dim = static_cast<int>(std::lround(std::sqrt(double(p.n))));
  doc.data["n"] = p.n;
  doc.data["alpha"] = p.alpha;
  doc.data["beta"] = p.beta;
  doc.data["lower"] = p.lower;
  doc.data["upper"] = p.upper;
  doc.data["m_max"] = p.m_max;
  doc.data["m_max_integral"] = p.m_max_integral;
  doc.data["quantum_u_2l"] = p.quantum_u_2l;
  doc.data["quantum_n"] = p.quantum_n;
  doc.meta = meta;
  return doc;
}

GeneralParams params_from_document(const Document& doc) {
  if (doc.kind != DocKind::kParams) throw Error("expected a params document");
  return GeneralParams::make(doc.data.at("n").get<int>(),
                             doc.data.at("alpha").get<double>());
}

Document report_document(const Json& report, int dim, const Json& meta) {
  Document doc;
  doc.kind = DocKind::kReport;
  doc.dim = dim;
  doc.data = report;
  doc.meta = meta;
  return doc;
}

}  // namespace qplex
