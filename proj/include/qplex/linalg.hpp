#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace qplex {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

// Absolute tolerances, entries of order 1, d <= 16.
inline constexpr double kTolEq = 1e-12;
inline constexpr double kTolEig = 1e-10;
inline constexpr double kTolPsd = 1e-10;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Max-norm Hermiticity defect |M - M^dag|_max.
double hermiticity_defect(const Mat& m);

/// Max-norm unitarity defect |M M^dag - I|_max.
double unitarity_defect(const Mat& m);

/// Hermitian matrix, checked on construction.
class HermitianOperator {
 public:
  explicit HermitianOperator(Mat m, double tol = kTolEq);
  int dim() const { return static_cast<int>(mat_.rows()); }
  const Mat& mat() const { return mat_; }

 private:
  Mat mat_;
};

/// Unitary matrix, checked on construction.
class UnitaryOperator {
 public:
  explicit UnitaryOperator(Mat m, double tol = kTolEq);
  int dim() const { return static_cast<int>(mat_.rows()); }
  const Mat& mat() const { return mat_; }
  UnitaryOperator adjoint() const;

 private:
  Mat mat_;
};

/// Unit-trace positive-semidefinite Hermitian matrix.
class DensityOperator {
 public:
  explicit DensityOperator(HermitianOperator h, double tol_trace = kTolEq,
                           double tol_psd = kTolPsd);
  int dim() const { return op_.dim(); }
  const Mat& mat() const { return op_.mat(); }
  const HermitianOperator& hermitian() const { return op_; }

 private:
  HermitianOperator op_;
};

struct Spectrum {
  RVec ascending;
  RVec descending;
};

/// Eigenvalues of a Hermitian operator, both orderings.
Spectrum hermitian_eigen(const HermitianOperator& h);

/// Tr(AB) for Hermitian A, B; guaranteed real.
double hs_inner(const HermitianOperator& a, const HermitianOperator& b);

/// Seedable generator with deterministic stream splitting: derived(k)
/// yields an independent stream obtained by hashing (seed, k).
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  Rng derived(std::uint64_t stream) const;

  double gaussian();
  double uniform();  // [0,1)
  Complex complex_gaussian();
  std::uint64_t next_u64();
  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> unif_{0.0, 1.0};
};

/// Haar-distributed unitary via QR of a complex Ginibre matrix with
/// phase fixing of the triangular factor's diagonal.
UnitaryOperator haar_unitary(int d, std::uint64_t seed);
UnitaryOperator haar_unitary(int d, Rng& rng);

/// Haar-random pure state (unit vector).
CVec haar_state(int d, Rng& rng);

/// Random density operator of the given rank (rank-1: Haar pure state).
DensityOperator random_density(int d, int rank, std::uint64_t seed);
DensityOperator random_density(int d, int rank, Rng& rng);

}  // namespace qplex
