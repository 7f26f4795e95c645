#pragma once

#include <json.hpp>
#include <string>

#include "qplex/geometry.hpp"
#include "qplex/germlab.hpp"
#include "qplex/sic.hpp"
#include "qplex/symmetry.hpp"

namespace qplex {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

enum class DocKind {
  kFiducial,
  kSicSystem,
  kProbVector,
  kMeasurement,
  kStretchedMatrix,
  kPointSet,
  kReport,
  kParams,
};

std::string to_string(DocKind kind);
DocKind doc_kind_from_string(const std::string& s);

/// One serialized artifact: kind, dimension, kind-specific payload and
/// reproducibility metadata.  Complex numbers are [re, im] pairs,
/// matrices row-major arrays of rows.
struct Document {
  DocKind kind;
  int dim = 0;
  Json data;
  Json meta;  // seed, tool version, tolerances used
};

Document load_document(const std::string& path);
void save_document(const Document& doc, const std::string& path);

Json make_meta(std::uint64_t seed, double tol);

// Payload builders and parsers; parsers validate shape and finiteness.
Document fiducial_document(const SicFiducial& f, const Json& meta);
SicFiducial fiducial_from_document(const Document& doc);

Document sic_system_document(const SicSystem& s, const Json& meta);
SicSystem sic_system_from_document(const Document& doc);

Document prob_vector_document(const RVec& p, int dim, const Json& meta);
RVec prob_vector_from_document(const Document& doc);

Document measurement_document(const MeasurementMatrix& r, int dim,
                              const Json& meta);
MeasurementMatrix measurement_from_document(const Document& doc);

Document stretched_document(const StretchedMatrix& r, int dim,
                            const Json& meta);
StretchedMatrix stretched_from_document(const Document& doc);

Document point_set_document(const PointSet& s, int dim, const Json& meta);
PointSet point_set_from_document(const Document& doc);

Document params_document(const GeneralParams& p, const Json& meta);
GeneralParams params_from_document(const Document& doc);

Document report_document(const Json& report, int dim, const Json& meta);

}  // namespace qplex
