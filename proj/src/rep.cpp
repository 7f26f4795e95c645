#include "qplex/rep.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace qplex {

DimensionParams DimensionParams::make(int d) {
  if (d < 2) throw Error("DimensionParams: d must be >= 2");
  DimensionParams p;
  p.d = d;
  p.n = d * d;
  p.alpha = d + 1.0;
  p.beta = 1.0 / d;
  p.lower = 1.0 / (d * (d + 1.0));
  p.upper = 2.0 / (d * (d + 1.0));
  return p;
}

GeneralParams GeneralParams::make(int n, double alpha) {
  if (n < 2) throw Error("GeneralParams: N must be >= 2");
  if (alpha <= 1.0) throw Error("GeneralParams: alpha must exceed 1");
  GeneralParams p;
  p.n = n;
  p.alpha = alpha;
  p.beta = (alpha - 1.0) / n;
  p.lower = -1.0 / (n * alpha) + 1.0 / n;
  p.upper = (n - 1.0) / (n * alpha * alpha) + 1.0 / n;
  p.m_max = 1.0 + (n - 1.0) / alpha;
  p.m_max_integral = std::abs(p.m_max - std::round(p.m_max)) < 1e-9;
  p.quantum_u_2l = std::abs(p.upper - 2.0 * p.lower) < 1e-12;
  const double root = alpha - 1.0;
  p.quantum_n = std::abs(n - root * root) < 1e-9;
  return p;
}

ProbVector::ProbVector(RVec entries, double tol) : p_(std::move(entries)) {
  if (p_.size() < 1) throw Error("ProbVector: empty");
  if (!p_.allFinite()) throw Error("ProbVector: non-finite entries");
  const double min_entry = p_.minCoeff();
  if (min_entry < -tol) {
    int idx = 0;
    p_.minCoeff(&idx);
    throw Error("ProbVector: entry " + std::to_string(idx) + " = " +
                std::to_string(min_entry) + " below -tolerance");
  }
  const double sum = p_.sum();
  if (std::abs(sum - 1.0) > tol)
    throw Error("ProbVector: sum " + std::to_string(sum) + " != 1");
  if (min_entry < 0.0) {
    // Clamp floating-point dust and renormalize.
    for (int i = 0; i < p_.size(); ++i) {
      if (p_(i) < 0.0) {
        clamp_adjustment_ += -p_(i);
        p_(i) = 0.0;
      }
    }
    p_ /= p_.sum();
  }
}

MeasurementMatrix::MeasurementMatrix(RMat entries, double tol)
    : r_(std::move(entries)) {
  if (r_.rows() < 1 || r_.cols() < 1) throw Error("MeasurementMatrix: empty");
  if (!r_.allFinite()) throw Error("MeasurementMatrix: non-finite entries");
  if (r_.minCoeff() < -tol)
    throw Error("MeasurementMatrix: negative conditional probability " +
                std::to_string(r_.minCoeff()));
  for (int i = 0; i < r_.cols(); ++i) {
    const double colsum = r_.col(i).sum();
    if (std::abs(colsum - 1.0) > tol * r_.rows())
      throw Error("MeasurementMatrix: column " + std::to_string(i) +
                  " sums to " + std::to_string(colsum));
  }
  gamma_ = r_.rowwise().sum() / static_cast<double>(r_.cols());
}

RVec state_to_prob_raw(const Mat& rho,
                       const std::vector<HermitianOperator>& ops, int d) {
  const int n = static_cast<int>(ops.size());
  RVec p(n);
  for (int i = 0; i < n; ++i)
    p(i) = (rho * ops[i].mat()).trace().real() / d;
  return p;
}

ProbVector state_to_prob(const DensityOperator& rho, const SicSystem& system) {
  if (rho.dim() != system.dim)
    throw Error("state_to_prob: dimension mismatch");
  return ProbVector(state_to_prob_raw(rho.mat(), system.projectors,
                                      system.dim));
}

Mat prob_to_operator_raw(const RVec& p,
                         const std::vector<HermitianOperator>& ops, int d) {
  if (p.size() != static_cast<int>(ops.size()))
    throw Error("prob_to_operator: length mismatch");
  Mat out = Mat::Zero(d, d);
  for (int i = 0; i < p.size(); ++i)
    out += ((d + 1.0) * p(i) - 1.0 / d) * ops[i].mat();
  return out;
}

HermitianOperator prob_to_operator(const ProbVector& p,
                                   const SicSystem& system) {
  return HermitianOperator(
      prob_to_operator_raw(p.vec(), system.projectors, system.dim));
}

StateValidity validate_state_vector(const ProbVector& p,
                                    const SicSystem& system,
                                    const TripleProducts& triples,
                                    double tol_psd, double tol_residual) {
  const int d = system.dim;
  if (p.size() != d * d)
    throw Error("validate_state_vector: length mismatch");
  StateValidity v;
  const Mat rho = prob_to_operator_raw(p.vec(), system.projectors, d);
  Eigen::SelfAdjointEigenSolver<Mat> es(rho, Eigen::EigenvaluesOnly);
  v.min_eigenvalue = es.eigenvalues().minCoeff();
  v.quadratic_residual =
      std::abs(p.vec().squaredNorm() - 2.0 / (d * (d + 1.0)));
  v.cubic_residual = std::abs(triple_contract(triples, p.vec()) -
                              (d + 7.0) / std::pow(d + 1.0, 3));
  v.quantum_state = v.min_eigenvalue > -tol_psd;
  v.pure_state = v.quantum_state && v.quadratic_residual < tol_residual &&
                 v.cubic_residual < tol_residual;
  return v;
}

MeasurementMatrix povm_to_measurement(
    const std::vector<HermitianOperator>& effects, const SicSystem& system) {
  const int d = system.dim;
  if (effects.empty()) throw Error("povm_to_measurement: no effects");
  Mat sum = Mat::Zero(d, d);
  for (const auto& e : effects) {
    if (e.dim() != d) throw Error("povm_to_measurement: dimension mismatch");
    Eigen::SelfAdjointEigenSolver<Mat> es(e.mat(), Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -kTolPsd)
      throw Error("povm_to_measurement: effect has eigenvalue " +
                  std::to_string(es.eigenvalues().minCoeff()));
    sum += e.mat();
  }
  Mat res = sum;
  res.diagonal().array() -= 1.0;
  if (res.cwiseAbs().maxCoeff() > kTolEq * d * effects.size())
    throw Error("povm_to_measurement: effects do not sum to identity");
  const int n = static_cast<int>(effects.size());
  RMat r(n, d * d);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < d * d; ++i)
      r(j, i) = (effects[j].mat() * system.projectors[i].mat()).trace().real();
  return MeasurementMatrix(std::move(r));
}

UrgleichungResult urgleichung(const ProbVector& p, const MeasurementMatrix& r,
                              double alpha, double beta, double tol) {
  if (p.size() != r.inputs())
    throw Error("urgleichung: state length != measurement inputs");
  const RVec m = alpha * p.vec().array() - beta;
  UrgleichungResult out;
  out.q = r.mat() * m;
  out.min_entry = out.q.minCoeff();
  out.consistent = out.min_entry >= -tol;
  return out;
}

UrgleichungResult urgleichung(const ProbVector& p, const MeasurementMatrix& r,
                              const DimensionParams& params) {
  return urgleichung(p, r, params.alpha, params.beta);
}

UrgleichungResult urgleichung(const ProbVector& p, const MeasurementMatrix& r,
                              const GeneralParams& params) {
  return urgleichung(p, r, params.alpha, params.beta);
}

RVec reference_rules(const ProbVector& p, const MeasurementMatrix& r,
                     ReferenceMode mode, const DimensionParams& params) {
  if (p.size() != r.inputs())
    throw Error("reference_rules: state length != measurement inputs");
  const RVec classical = r.mat() * p.vec();
  if (mode == ReferenceMode::kClassical) return classical;
  if (r.outcomes() != params.d)
    throw Error("reference_rules: von Neumann mode needs d outcomes");
  return (params.d + 1.0) * classical.array() - 1.0;
}

RMat unitary_conditionals(const UnitaryOperator& u, const SicSystem& system) {
  const int d = system.dim;
  if (u.dim() != d) throw Error("evolve: dimension mismatch");
  const int n = d * d;
  std::vector<Mat> conjugated(n);
  for (int i = 0; i < n; ++i)
    conjugated[i] = u.mat() * system.projectors[i].mat() * u.mat().adjoint();
  RMat cond(n, n);  // cond(j, i) = u(j|i)
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      cond(j, i) =
          (conjugated[i] * system.projectors[j].mat()).trace().real() / d;
  return cond;
}

ProbVector evolve(const ProbVector& p, const UnitaryOperator& u,
                  const SicSystem& system) {
  const int d = system.dim;
  const RMat cond = unitary_conditionals(u, system);
  // Double stochasticity check, looser by n for accumulation.
  const int n = d * d;
  for (int k = 0; k < n; ++k) {
    if (std::abs(cond.row(k).sum() - 1.0) > kTolProb * n ||
        std::abs(cond.col(k).sum() - 1.0) > kTolProb * n)
      throw Error("evolve: conditional matrix not doubly stochastic");
  }
  const RVec m = (d + 1.0) * p.vec().array() - 1.0 / d;
  return ProbVector(cond * m);
}

double hs_from_probs(const ProbVector& p, const ProbVector& s,
                     const DimensionParams& params) {
  if (p.size() != s.size() || p.size() != params.n)
    throw Error("hs_from_probs: length mismatch");
  return params.d * (params.d + 1.0) * p.vec().dot(s.vec()) - 1.0;
}

}  // namespace qplex
