#pragma once

#include <optional>

#include "qplex/linalg.hpp"
#include "qplex/sic.hpp"

namespace qplex {

inline constexpr double kTolProb = 1e-10;

/// Scalar constants of the quantum point of the parameter family.
struct DimensionParams {
  int d;
  int n;        // d^2
  double alpha; // d + 1
  double beta;  // 1/d
  double lower; // 1/(d(d+1))
  double upper; // 2/(d(d+1))

  static DimensionParams make(int d);
};

/// Generalized urgleichung constants; alpha need not be integer.
struct GeneralParams {
  int n;
  double alpha;
  double beta;   // (alpha-1)/N
  double lower;  // -1/(N alpha) + 1/N
  double upper;  // (N-1)/(N alpha^2) + 1/N
  double m_max;  // 1 + (N-1)/alpha
  bool m_max_integral;  // within 1e-9
  bool quantum_u_2l;    // U == 2L
  bool quantum_n;       // N == (alpha-1)^2

  static GeneralParams make(int n, double alpha);
};

/// Point of the N-outcome probability simplex.  Tiny negative entries
/// within tolerance are clamped to zero and the vector renormalized;
/// the adjustment is recorded in clamp_adjustment.
class ProbVector {
 public:
  explicit ProbVector(RVec entries, double tol = kTolProb);
  int size() const { return static_cast<int>(p_.size()); }
  const RVec& vec() const { return p_; }
  double operator()(int i) const { return p_(i); }
  double clamp_adjustment() const { return clamp_adjustment_; }

 private:
  RVec p_;
  double clamp_adjustment_ = 0.0;
};

/// Conditional probabilities r(j|i) with outcome weights
/// gamma_j = (1/N) sum_i r(j|i).
class MeasurementMatrix {
 public:
  /// entries(j, i) = r(j|i); rows are outcomes, columns sky inputs.
  explicit MeasurementMatrix(RMat entries, double tol = kTolProb);
  int outcomes() const { return static_cast<int>(r_.rows()); }
  int inputs() const { return static_cast<int>(r_.cols()); }
  const RMat& mat() const { return r_; }
  double operator()(int j, int i) const { return r_(j, i); }
  const RVec& gamma() const { return gamma_; }

 private:
  RMat r_;
  RVec gamma_;
};

/// p(i) = (1/d) Tr(rho Pi_i).
ProbVector state_to_prob(const DensityOperator& rho, const SicSystem& system);
RVec state_to_prob_raw(const Mat& rho, const std::vector<HermitianOperator>& ops,
                       int d);

/// sum_i [(d+1) p(i) - 1/d] Pi_i; trace 1, positivity not guaranteed.
HermitianOperator prob_to_operator(const ProbVector& p,
                                   const SicSystem& system);
Mat prob_to_operator_raw(const RVec& p,
                         const std::vector<HermitianOperator>& ops, int d);

struct StateValidity {
  double min_eigenvalue;
  double quadratic_residual;  // |sum p^2 - 2/(d(d+1))|
  double cubic_residual;      // |sum c p p p - (d+7)/(d+1)^3|
  bool quantum_state;         // PSD within tolerance
  bool pure_state;            // both residuals small and PSD
};

StateValidity validate_state_vector(const ProbVector& p,
                                    const SicSystem& system,
                                    const TripleProducts& triples,
                                    double tol_psd = kTolPsd,
                                    double tol_residual = 1e-8);

/// r(j|i) = Tr(E_j Pi_i) for PSD effects summing to identity.
MeasurementMatrix povm_to_measurement(const std::vector<HermitianOperator>& effects,
                                      const SicSystem& system);

struct UrgleichungResult {
  RVec q;
  bool consistent;        // all entries >= -tol
  double min_entry;
  std::optional<ProbVector> prob() const {
    if (!consistent) return std::nullopt;
    return ProbVector(q);
  }
};

/// q(j) = sum_i [alpha p(i) - beta] r(j|i).  Negative outputs beyond
/// tolerance are returned raw with the consistency flag cleared.
UrgleichungResult urgleichung(const ProbVector& p, const MeasurementMatrix& r,
                              double alpha, double beta,
                              double tol = kTolProb);
UrgleichungResult urgleichung(const ProbVector& p, const MeasurementMatrix& r,
                              const DimensionParams& params);
UrgleichungResult urgleichung(const ProbVector& p, const MeasurementMatrix& r,
                              const GeneralParams& params);

enum class ReferenceMode { kClassical, kVonNeumann };

/// Classical law of total probability, or its von Neumann rescaling
/// q(j) = (d+1) sum_i p(i) r(j|i) - 1 (requires d outcomes).
RVec reference_rules(const ProbVector& p, const MeasurementMatrix& r,
                     ReferenceMode mode, const DimensionParams& params);

/// SIC image of U rho U^dag computed entirely in probability space via
/// the doubly stochastic matrix u(j|i) = (1/d) Tr(U Pi_i U^dag Pi_j).
ProbVector evolve(const ProbVector& p, const UnitaryOperator& u,
                  const SicSystem& system);

/// The u(j|i) matrix itself (rows j, columns i).
RMat unitary_conditionals(const UnitaryOperator& u, const SicSystem& system);

/// Tr(rho sigma) from SIC representations: d(d+1)<p,s> - 1.
double hs_from_probs(const ProbVector& p, const ProbVector& s,
                     const DimensionParams& params);

}  // namespace qplex
