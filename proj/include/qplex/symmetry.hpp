#pragma once

#include "qplex/geometry.hpp"
#include "qplex/rep.hpp"

namespace qplex {

// Transfer entries accumulate d^2 trace terms, hence looser than kTolEq.
inline constexpr double kTolSym = 1e-9;

/// The N x N real matrix R_ij = (d+1) r(i|j) - (1/d) sum_k r(i|k).
/// Column-acting convention: q_r(i) = sum_j R_ij q(j).
struct StretchedMatrix {
  int n;
  RMat entries;
};

/// N vertices on the out-sphere with equal pairwise inner products.
struct MeasurementSimplex {
  std::vector<RVec> vertices;
};

StretchedMatrix stretch(const MeasurementMatrix& r,
                        const DimensionParams& params);

struct UnstretchResult {
  RMat conditionals;    // r(i|j)
  bool valid;           // all entries >= -tol
  double min_entry;
};

/// Inverse affine map r(i|j) = (1/(d+1))(R_ij + (1/d) sum_k R_ik).
UnstretchResult unstretch(const StretchedMatrix& r,
                          const DimensionParams& params);

struct StretchedReport {
  double orthogonality_defect;   // |R R^T - I|_max
  double barycenter_defect;      // |Rc - c|_max
  double entry_bound_violation;  // max(0, -1/d - min entry)
  double row_sum_defect;
  double col_sum_defect;
  double simplex_norm_defect;    // vertex distance from S_o
  double simplex_regularity_defect;
  bool pass;
  MeasurementSimplex simplex;
};

/// Stochastic-subgroup conditions plus measurement-simplex extraction
/// via s_i(j) = (R_ij + 1/d)/(d+1).
StretchedReport verify_stretched(const StretchedMatrix& r,
                                 const DimensionParams& params,
                                 double tol = kTolSym);

/// R_ij = ((d+1)/d) Tr(Pi_i U Pi_j U^dag) - 1/d; works for genuine SICs
/// and for quasi-SICs.
StretchedMatrix stretched_from_unitary(const UnitaryOperator& u,
                                       const std::vector<HermitianOperator>& ops,
                                       const DimensionParams& params);
StretchedMatrix stretched_from_unitary(const UnitaryOperator& u,
                                       const SicSystem& system,
                                       const DimensionParams& params);
StretchedMatrix stretched_from_unitary(const UnitaryOperator& u,
                                       const QuasiSic& system,
                                       const DimensionParams& params);

/// Anti-unitary: complex conjugation in the computational basis
/// composed with the given unitary.
StretchedMatrix stretched_from_antiunitary(const UnitaryOperator& u,
                                           const SicSystem& system,
                                           const DimensionParams& params);

struct ImageReport {
  int total;
  int valid_images;
  double fraction;
};

/// Applies the measurement map to each sampled rep and counts how many
/// images remain valid quantum states.
ImageReport image_membership(const StretchedMatrix& r, const PointSet& sample,
                             const SicSystem& system,
                             const DimensionParams& params);

struct ClosureReport {
  bool pass;
  int products_checked;
  std::vector<int> bad_elements;   // inputs failing verify_stretched
  double worst_defect;
};

/// Random products and transposes of the sample tested against the
/// stochastic-subgroup conditions.
ClosureReport group_closure_check(const std::vector<StretchedMatrix>& sample,
                                  const DimensionParams& params,
                                  int n_products, std::uint64_t seed);

}  // namespace qplex
