#pragma once

#include <optional>
#include <vector>

#include "qplex/linalg.hpp"

namespace qplex {

// Looser than kTolEq: overlap checks accumulate over d^4 pairs.
inline constexpr double kTolSic = 1e-8;
inline constexpr double kTolBuild = 1e-8;

/// Weyl-Heisenberg group data for dimension d, phase convention
/// tau = -exp(i pi / d).
class WHGroup {
 public:
  explicit WHGroup(int d);
  int dim() const { return d_; }
  Complex tau() const { return tau_; }
  /// D_{ab} = tau^{ab} X^a Z^b, 0 <= a,b < d.
  UnitaryOperator displacement(int a, int b) const;
  /// D_{ab} |psi>, without forming the matrix.
  CVec apply_displacement(int a, int b, const CVec& psi) const;

 private:
  int d_;
  Complex tau_;
  std::vector<Complex> omega_pow_;  // omega^k, k in [0, d)
};

/// Unit vector generating a (candidate) SIC as its WH orbit.
class SicFiducial {
 public:
  explicit SicFiducial(CVec v, double tol = kTolEq);
  int dim() const { return static_cast<int>(vec_.size()); }
  const CVec& vec() const { return vec_; }

 private:
  CVec vec_;
};

/// d^2 rank-one projectors satisfying the SIC overlap law.
struct SicSystem {
  int dim;
  std::vector<HermitianOperator> projectors;  // lexicographic in (a,b)
  enum class Provenance { kFiducial, kExplicit } provenance;
};

/// Trace-zero Hermitian simplex basis underlying a quasi-SIC.
struct QuasiSicBasis {
  int dim;
  std::vector<HermitianOperator> elements;  // d^2 of them, unit HS norm
};

/// d^2 trace-1 Hermitian operators obeying the SIC overlap law without
/// positivity.
struct QuasiSic {
  int dim;
  std::vector<HermitianOperator> operators;
  QuasiSicBasis basis;
};

struct TripleProducts {
  int dim;
  int n;                       // d^2
  std::vector<double> tensor;  // row-major c[i*n*n + j*n + k]
  double operator()(int i, int j, int k) const {
    return tensor[static_cast<std::size_t>(i) * n * n +
                  static_cast<std::size_t>(j) * n + k];
  }
};

/// Sum of squared deviations of the WH-orbit overlaps from 1/(d+1);
/// zero exactly when the orbit of the fiducial is a SIC.
double sic_defect(const SicFiducial& fiducial);

struct FiducialSearchResult {
  std::optional<SicFiducial> fiducial;  // set on success
  double best_defect;
  int restarts_used;
};

/// Multi-start quasi-Newton minimization of sic_defect over the unit
/// sphere; deterministic for fixed seed.
FiducialSearchResult find_sic_fiducial(int d, std::uint64_t seed, double tol,
                                       int max_restarts);

SicSystem sic_from_fiducial(const SicFiducial& fiducial,
                            double tol_build = kTolBuild);

struct SicVerification {
  double max_trace_dev;       // |Tr Pi - 1|
  double max_idempotency;     // |Pi^2 - Pi|_max
  double max_overlap_dev;     // vs (d delta + 1)/(d+1)
  double max_resolution_dev;  // |(1/d) sum Pi - I|_max
  bool pass;
};

SicVerification verify_sic(const SicSystem& system, double tol = kTolSic);

/// Orthonormal trace-zero Hermitian basis (generalized Gell-Mann),
/// regular-simplex vertices in it, Pi_j = sqrt((d-1)/d) B_j + I/d.
QuasiSic build_quasi_sic(int d);

struct QuasiSicVerification {
  double max_trace_dev;
  double max_overlap_dev;
  double min_eigenvalue;  // over all operators
  bool pass;
};

QuasiSicVerification verify_quasi_sic(const QuasiSic& q, double tol = kTolSic);

TripleProducts triple_products(const std::vector<HermitianOperator>& ops,
                               int d);
TripleProducts triple_products(const SicSystem& system);
TripleProducts triple_products(const QuasiSic& system);

/// Contraction sum_{ijk} c_ijk p(i) p(j) p(k).
double triple_contract(const TripleProducts& c, const RVec& p);

}  // namespace qplex
