#include "qplex/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <cmath>
#include <sstream>

namespace qplex {

double hermiticity_defect(const Mat& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_defect(const Mat& m) {
  Mat g = m * m.adjoint();
  g.diagonal().array() -= 1.0;
  return g.cwiseAbs().maxCoeff();
}

HermitianOperator::HermitianOperator(Mat m, double tol) : mat_(std::move(m)) {
  if (mat_.rows() != mat_.cols() || mat_.rows() < 1)
    throw Error("HermitianOperator: matrix must be square and nonempty");
  if (!mat_.allFinite()) throw Error("HermitianOperator: non-finite entries");
  const double defect = hermiticity_defect(mat_);
  if (defect > tol) {
    std::ostringstream os;
    os << "HermitianOperator: max asymmetry " << defect << " exceeds tolerance "
       << tol;
    throw Error(os.str());
  }
  // Symmetrize the floating-point dust so downstream algebra sees an
  // exactly Hermitian matrix.
  mat_ = 0.5 * (mat_ + mat_.adjoint().eval());
}

UnitaryOperator::UnitaryOperator(Mat m, double tol) : mat_(std::move(m)) {
  if (mat_.rows() != mat_.cols() || mat_.rows() < 1)
    throw Error("UnitaryOperator: matrix must be square and nonempty");
  if (!mat_.allFinite()) throw Error("UnitaryOperator: non-finite entries");
  const double defect = unitarity_defect(mat_);
  if (defect > tol) {
    std::ostringstream os;
    os << "UnitaryOperator: |UU^dag - I| = " << defect << " exceeds tolerance "
       << tol;
    throw Error(os.str());
  }
}

UnitaryOperator UnitaryOperator::adjoint() const {
  return UnitaryOperator(mat_.adjoint());
}

DensityOperator::DensityOperator(HermitianOperator h, double tol_trace,
                                 double tol_psd)
    : op_(std::move(h)) {
  const double tr = op_.mat().trace().real();
  if (std::abs(tr - 1.0) > tol_trace)
    throw Error("DensityOperator: trace " + std::to_string(tr) + " != 1");
  Eigen::SelfAdjointEigenSolver<Mat> es(op_.mat(), Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -tol_psd)
    throw Error("DensityOperator: minimum eigenvalue " +
                std::to_string(min_eig) + " below -tol_psd");
}

Spectrum hermitian_eigen(const HermitianOperator& h) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h.mat(), Eigen::EigenvaluesOnly);
  Spectrum s;
  s.ascending = es.eigenvalues();
  s.descending = s.ascending.reverse();
  return s;
}

double hs_inner(const HermitianOperator& a, const HermitianOperator& b) {
  if (a.dim() != b.dim())
    throw Error("hs_inner: dimension mismatch (" + std::to_string(a.dim()) +
                " vs " + std::to_string(b.dim()) + ")");
  return (a.mat() * b.mat()).trace().real();
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

Rng Rng::derived(std::uint64_t stream) const {
  return Rng(splitmix64(seed_ ^ splitmix64(stream + 1)));
}

double Rng::gaussian() { return normal_(engine_); }
double Rng::uniform() { return unif_(engine_); }
Complex Rng::complex_gaussian() {
  // Variance 1 per complex entry.
  const double s = std::sqrt(0.5);
  return {s * normal_(engine_), s * normal_(engine_)};
}
std::uint64_t Rng::next_u64() { return engine_(); }

UnitaryOperator haar_unitary(int d, Rng& rng) {
  if (d < 1) throw Error("haar_unitary: d must be >= 1");
  Mat g(d, d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) g(i, j) = rng.complex_gaussian();
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase freedom of QR: make diag(R) real positive.
  for (int j = 0; j < d; ++j) {
    Complex rjj = r(j, j);
    Complex phase = (std::abs(rjj) > 0) ? rjj / std::abs(rjj) : Complex(1, 0);
    q.col(j) *= phase;
  }
  return UnitaryOperator(std::move(q));
}

UnitaryOperator haar_unitary(int d, std::uint64_t seed) {
  Rng rng(seed);
  return haar_unitary(d, rng);
}

CVec haar_state(int d, Rng& rng) {
  CVec v(d);
  for (int i = 0; i < d; ++i) v(i) = rng.complex_gaussian();
  double n = v.norm();
  while (n == 0.0) {  // astronomically unlikely
    for (int i = 0; i < d; ++i) v(i) = rng.complex_gaussian();
    n = v.norm();
  }
  return v / n;
}

DensityOperator random_density(int d, int rank, Rng& rng) {
  if (rank < 1 || rank > d)
    throw Error("random_density: rank must be in [1, d]");
  if (rank == 1) {
    CVec psi = haar_state(d, rng);
    return DensityOperator(HermitianOperator(psi * psi.adjoint()));
  }
  // Partial trace of a Haar-random pure state on C^d (x) C^rank:
  // rho = G G^dag / Tr(G G^dag) with G a d x rank Ginibre block.
  Mat g(d, rank);
  for (int j = 0; j < rank; ++j)
    for (int i = 0; i < d; ++i) g(i, j) = rng.complex_gaussian();
  Mat rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityOperator(HermitianOperator(std::move(rho)));
}

DensityOperator random_density(int d, int rank, std::uint64_t seed) {
  Rng rng(seed);
  return random_density(d, rank, rng);
}

}  // namespace qplex
