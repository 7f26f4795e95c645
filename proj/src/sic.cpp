#include "qplex/sic.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>

namespace qplex {

WHGroup::WHGroup(int d) : d_(d) {
  if (d < 2) throw Error("WHGroup: d must be >= 2");
  tau_ = -std::exp(Complex(0.0, std::numbers::pi / d));
  omega_pow_.resize(d);
  for (int k = 0; k < d; ++k)
    omega_pow_[k] = std::exp(Complex(0.0, 2.0 * std::numbers::pi * k / d));
}

CVec WHGroup::apply_displacement(int a, int b, const CVec& psi) const {
  if (a < 0 || a >= d_ || b < 0 || b >= d_)
    throw Error("WHGroup: displacement indices out of range");
  // (X^a Z^b v)_j = tau^{ab} omega^{b(j-a)} v_{(j-a) mod d}
  const Complex phase = std::pow(tau_, a * b);
  CVec out(d_);
  for (int j = 0; j < d_; ++j) {
    const int src = ((j - a) % d_ + d_) % d_;
    out(j) = phase * omega_pow_[(b * src) % d_] * psi(src);
  }
  return out;
}

UnitaryOperator WHGroup::displacement(int a, int b) const {
  Mat m = Mat::Zero(d_, d_);
  for (int col = 0; col < d_; ++col) {
    CVec e = CVec::Zero(d_);
    e(col) = 1.0;
    m.col(col) = apply_displacement(a, b, e);
  }
  return UnitaryOperator(std::move(m));
}

SicFiducial::SicFiducial(CVec v, double tol) : vec_(std::move(v)) {
  if (vec_.size() < 2) throw Error("SicFiducial: dimension must be >= 2");
  if (!vec_.allFinite()) throw Error("SicFiducial: non-finite entries");
  const double n = vec_.norm();
  if (std::abs(n - 1.0) > tol)
    throw Error("SicFiducial: norm " + std::to_string(n) + " != 1");
}

namespace {

// D_ab^dag v, matching WHGroup::apply_displacement.
CVec apply_displacement_adj(const WHGroup& g, int a, int b, const CVec& psi) {
  const int d = g.dim();
  const Complex phase = std::conj(std::pow(g.tau(), a * b));
  CVec out(d);
  for (int j = 0; j < d; ++j) {
    const int src = (j + a) % d;
    // omega^{-b j} = conj(omega^{b j})
    const Complex w =
        std::exp(Complex(0.0, -2.0 * std::numbers::pi * ((b * j) % d) / d));
    out(j) = phase * w * psi(src);
  }
  return out;
}

// Defect and (optionally) its Euclidean gradient in the 2d real
// coordinates of the *normalized* vector.
double defect_and_grad(const WHGroup& g, const CVec& psi, RVec* grad) {
  const int d = g.dim();
  const double target = 1.0 / (d + 1);
  double f = 0.0;
  CVec gc = CVec::Zero(d);  // Wirtinger gradient wrt conj(psi)
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      if (a == 0 && b == 0) continue;
      const CVec dpsi = g.apply_displacement(a, b, psi);
      const Complex z = psi.dot(dpsi);  // <psi| D |psi>
      const double w = std::norm(z) - target;
      f += w * w;
      if (grad) {
        gc += 2.0 * w *
              (std::conj(z) * dpsi + z * apply_displacement_adj(g, a, b, psi));
      }
    }
  }
  if (grad) {
    grad->resize(2 * d);
    for (int i = 0; i < d; ++i) {
      (*grad)(i) = 2.0 * gc(i).real();
      (*grad)(d + i) = 2.0 * gc(i).imag();
    }
  }
  return f;
}

CVec to_complex(const RVec& x) {
  const int d = static_cast<int>(x.size()) / 2;
  CVec v(d);
  for (int i = 0; i < d; ++i) v(i) = Complex(x(i), x(d + i));
  return v;
}

// Objective on R^{2d}: defect of x/|x|, with gradient projected onto
// the sphere tangent and rescaled by 1/|x|.
double sphere_objective(const WHGroup& g, const RVec& x, RVec* grad) {
  const double r = x.norm();
  const RVec xhat = x / r;
  const CVec psi = to_complex(xhat);
  const double f = defect_and_grad(g, psi, grad);
  if (grad) {
    const double proj = grad->dot(xhat);
    *grad = (*grad - proj * xhat) / r;
  }
  return f;
}

// Compact L-BFGS with Armijo backtracking.
double lbfgs_minimize(const WHGroup& g, RVec& x, int max_iter, double f_tol) {
  const int n = static_cast<int>(x.size());
  const int memory = 10;
  std::vector<RVec> s_hist, y_hist;
  std::vector<double> rho_hist;
  RVec grad(n), grad_new(n);
  double f = sphere_objective(g, x, &grad);
  for (int iter = 0; iter < max_iter; ++iter) {
    if (f < f_tol || grad.norm() < 1e-16) break;
    // Two-loop recursion.
    RVec q = grad;
    const int m = static_cast<int>(s_hist.size());
    std::vector<double> alpha(m);
    for (int i = m - 1; i >= 0; --i) {
      alpha[i] = rho_hist[i] * s_hist[i].dot(q);
      q -= alpha[i] * y_hist[i];
    }
    if (m > 0) {
      const double gamma =
          s_hist.back().dot(y_hist.back()) / y_hist.back().squaredNorm();
      q *= gamma;
    }
    for (int i = 0; i < m; ++i) {
      const double beta = rho_hist[i] * y_hist[i].dot(q);
      q += (alpha[i] - beta) * s_hist[i];
    }
    RVec dir = -q;
    double dg = dir.dot(grad);
    if (dg >= 0) {  // not a descent direction; fall back to steepest
      dir = -grad;
      dg = -grad.squaredNorm();
    }
    // Armijo backtracking.
    double step = 1.0;
    double f_new = f;
    RVec x_new = x;
    bool accepted = false;
    for (int ls = 0; ls < 40; ++ls) {
      x_new = x + step * dir;
      f_new = sphere_objective(g, x_new, &grad_new);
      if (f_new <= f + 1e-4 * step * dg) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
    const RVec s = x_new - x;
    const RVec y = grad_new - grad;
    const double sy = s.dot(y);
    if (sy > 1e-14 * s.norm() * y.norm()) {
      s_hist.push_back(s);
      y_hist.push_back(y);
      rho_hist.push_back(1.0 / sy);
      if (static_cast<int>(s_hist.size()) > memory) {
        s_hist.erase(s_hist.begin());
        y_hist.erase(y_hist.begin());
        rho_hist.erase(rho_hist.begin());
      }
    }
    x = x_new;
    grad = grad_new;
    f = f_new;
    x.normalize();  // keep the iterate on the sphere
  }
  return sphere_objective(g, x, nullptr);
}

// Levenberg-damped Gauss-Newton polish on the residual vector
// r_mu = |<psi|D_mu|psi>|^2 - 1/(d+1); quadratic convergence near a
// zero-residual minimum.
double gauss_newton_polish(const WHGroup& g, RVec& x, int max_iter) {
  const int d = g.dim();
  const int n = 2 * d;
  const int nres = d * d - 1;
  double f = sphere_objective(g, x, nullptr);
  for (int iter = 0; iter < max_iter; ++iter) {
    x.normalize();
    const CVec psi = to_complex(x);
    Eigen::VectorXd res(nres);
    Eigen::MatrixXd jac(nres, n);
    const double target = 1.0 / (d + 1);
    int mu = 0;
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < d; ++b) {
        if (a == 0 && b == 0) continue;
        const CVec dpsi = g.apply_displacement(a, b, psi);
        const Complex z = psi.dot(dpsi);
        res(mu) = std::norm(z) - target;
        const CVec gc =
            std::conj(z) * dpsi + z * apply_displacement_adj(g, a, b, psi);
        RVec row(n);
        for (int i = 0; i < d; ++i) {
          row(i) = 2.0 * gc(i).real();
          row(d + i) = 2.0 * gc(i).imag();
        }
        // Project out the radial direction (residuals live on the sphere).
        row -= row.dot(x) * x;
        jac.row(mu) = row;
        ++mu;
      }
    }
    Eigen::MatrixXd h = jac.transpose() * jac;
    h.diagonal().array() += 1e-12;
    const RVec delta = h.ldlt().solve(-jac.transpose() * res);
    RVec x_new = (x + delta).normalized();
    const double f_new = sphere_objective(g, x_new, nullptr);
    if (f_new < f) {
      x = x_new;
      f = f_new;
    } else {
      break;
    }
    if (f < 1e-28) break;
  }
  return f;
}

}  // namespace

double sic_defect(const SicFiducial& fiducial) {
  WHGroup g(fiducial.dim());
  return defect_and_grad(g, fiducial.vec(), nullptr);
}

FiducialSearchResult find_sic_fiducial(int d, std::uint64_t seed, double tol,
                                       int max_restarts) {
  if (d < 2) throw Error("find_sic_fiducial: d must be >= 2");
  WHGroup g(d);
  Rng base(seed);
  FiducialSearchResult result;
  result.best_defect = std::numeric_limits<double>::infinity();
  result.restarts_used = 0;
  RVec best_x;
  for (int k = 0; k < max_restarts; ++k) {
    Rng rng = base.derived(static_cast<std::uint64_t>(k));
    RVec x(2 * d);
    for (int i = 0; i < 2 * d; ++i) x(i) = rng.gaussian();
    x.normalize();
    lbfgs_minimize(g, x, 2000, 1e-20);
    const double f = gauss_newton_polish(g, x, 50);
    result.restarts_used = k + 1;
    if (f < result.best_defect) {
      result.best_defect = f;
      best_x = x;
    }
    if (result.best_defect < tol) break;
  }
  if (result.best_defect < tol) {
    result.fiducial = SicFiducial(to_complex(best_x.normalized()));
  }
  return result;
}

SicSystem sic_from_fiducial(const SicFiducial& fiducial, double tol_build) {
  const double defect = sic_defect(fiducial);
  if (defect >= tol_build)
    throw Error("sic_from_fiducial: defect " + std::to_string(defect) +
                " exceeds build tolerance");
  const int d = fiducial.dim();
  WHGroup g(d);
  SicSystem sys;
  sys.dim = d;
  sys.provenance = SicSystem::Provenance::kFiducial;
  sys.projectors.reserve(d * d);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      const CVec v = g.apply_displacement(a, b, fiducial.vec());
      sys.projectors.emplace_back(Mat(v * v.adjoint()));
    }
  }
  return sys;
}

SicVerification verify_sic(const SicSystem& system, double tol) {
  const int d = system.dim;
  const int n = d * d;
  SicVerification rep{0.0, 0.0, 0.0, 0.0, false};
  if (static_cast<int>(system.projectors.size()) != n)
    throw Error("verify_sic: expected d^2 projectors");
  Mat sum = Mat::Zero(d, d);
  for (int i = 0; i < n; ++i) {
    const Mat& p = system.projectors[i].mat();
    rep.max_trace_dev =
        std::max(rep.max_trace_dev, std::abs(p.trace().real() - 1.0));
    rep.max_idempotency =
        std::max(rep.max_idempotency, (p * p - p).cwiseAbs().maxCoeff());
    sum += p;
  }
  Mat res = sum / d;
  res.diagonal().array() -= 1.0;
  rep.max_resolution_dev = res.cwiseAbs().maxCoeff();
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double overlap =
          (system.projectors[i].mat() * system.projectors[j].mat())
              .trace()
              .real();
      const double expected = (i == j) ? 1.0 : 1.0 / (d + 1);
      rep.max_overlap_dev =
          std::max(rep.max_overlap_dev, std::abs(overlap - expected));
    }
  }
  rep.pass = rep.max_trace_dev < tol && rep.max_idempotency < tol &&
             rep.max_overlap_dev < tol && rep.max_resolution_dev < tol;
  return rep;
}

namespace {

// Orthonormal trace-zero Hermitian basis (generalized Gell-Mann),
// Tr(G_a G_b) = delta_ab.
std::vector<Mat> gell_mann_basis(int d) {
  std::vector<Mat> basis;
  basis.reserve(d * d - 1);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      Mat sym = Mat::Zero(d, d);
      sym(j, k) = inv_sqrt2;
      sym(k, j) = inv_sqrt2;
      basis.push_back(sym);
      Mat asym = Mat::Zero(d, d);
      asym(j, k) = Complex(0, -inv_sqrt2);
      asym(k, j) = Complex(0, inv_sqrt2);
      basis.push_back(asym);
    }
  }
  for (int l = 1; l < d; ++l) {
    Mat diag = Mat::Zero(d, d);
    const double norm = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
    for (int j = 0; j < l; ++j) diag(j, j) = norm;
    diag(l, l) = -static_cast<double>(l) * norm;
    basis.push_back(diag);
  }
  return basis;
}

}  // namespace

QuasiSic build_quasi_sic(int d) {
  if (d < 2) throw Error("build_quasi_sic: d must be >= 2");
  const int n = d * d;
  const std::vector<Mat> gm = gell_mann_basis(d);
  // Regular-simplex vertices in R^{n-1}: directions (e_j - c) in R^n
  // mapped into the hyperplane orthogonal to the all-ones vector via a
  // Householder reflection.
  RVec ones = RVec::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
  RVec v = ones;
  v(n - 1) -= 1.0;
  const RMat house =
      RMat::Identity(n, n) - (2.0 / v.squaredNorm()) * (v * v.transpose());
  const double scale = std::sqrt(static_cast<double>(n) / (n - 1));
  QuasiSic q;
  q.dim = d;
  q.basis.dim = d;
  for (int j = 0; j < n; ++j) {
    RVec fj = RVec::Constant(n, -1.0 / n);
    fj(j) += 1.0;
    fj *= scale;  // unit vector in the hyperplane
    const RVec coords = house.leftCols(n - 1).transpose() * fj;
    Mat b = Mat::Zero(d, d);
    for (int a = 0; a < n - 1; ++a) b += coords(a) * gm[a];
    q.basis.elements.emplace_back(b);
    Mat pi = std::sqrt(static_cast<double>(d - 1) / d) * b;
    pi.diagonal().array() += 1.0 / d;
    q.operators.emplace_back(std::move(pi));
  }
  return q;
}

QuasiSicVerification verify_quasi_sic(const QuasiSic& q, double tol) {
  const int d = q.dim;
  const int n = d * d;
  QuasiSicVerification rep{0.0, 0.0, std::numeric_limits<double>::infinity(),
                           false};
  for (int i = 0; i < n; ++i) {
    const Mat& p = q.operators[i].mat();
    rep.max_trace_dev =
        std::max(rep.max_trace_dev, std::abs(p.trace().real() - 1.0));
    Eigen::SelfAdjointEigenSolver<Mat> es(p, Eigen::EigenvaluesOnly);
    rep.min_eigenvalue =
        std::min(rep.min_eigenvalue, es.eigenvalues().minCoeff());
    for (int j = i; j < n; ++j) {
      const double overlap =
          (p * q.operators[j].mat()).trace().real();
      const double expected = (i == j) ? 1.0 : 1.0 / (d + 1);
      rep.max_overlap_dev =
          std::max(rep.max_overlap_dev, std::abs(overlap - expected));
    }
  }
  rep.pass = rep.max_trace_dev < tol && rep.max_overlap_dev < tol;
  return rep;
}

TripleProducts triple_products(const std::vector<HermitianOperator>& ops,
                               int d) {
  const int n = d * d;
  if (static_cast<int>(ops.size()) != n)
    throw Error("triple_products: expected d^2 operators");
  TripleProducts c;
  c.dim = d;
  c.n = n;
  c.tensor.assign(static_cast<std::size_t>(n) * n * n, 0.0);
  auto at = [&](int i, int j, int k) -> double& {
    return c.tensor[static_cast<std::size_t>(i) * n * n +
                    static_cast<std::size_t>(j) * n + k];
  };
  // Compute each value once for i <= j <= k and copy to all index
  // permutations, so the stored tensor is exactly symmetric.
  std::vector<Mat> pairs(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      pairs[static_cast<std::size_t>(i) * n + j] = ops[i].mat() * ops[j].mat();
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const Mat& pij = pairs[static_cast<std::size_t>(i) * n + j];
      for (int k = j; k < n; ++k) {
        const double val =
            (pij * ops[k].mat()).trace().real();
        at(i, j, k) = at(i, k, j) = at(j, i, k) = at(j, k, i) = at(k, i, j) =
            at(k, j, i) = val;
      }
    }
  }
  return c;
}

TripleProducts triple_products(const SicSystem& system) {
  return triple_products(system.projectors, system.dim);
}

TripleProducts triple_products(const QuasiSic& system) {
  return triple_products(system.operators, system.dim);
}

double triple_contract(const TripleProducts& c, const RVec& p) {
  const int n = c.n;
  if (p.size() != n) throw Error("triple_contract: length mismatch");
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double pij = p(i) * p(j);
      if (pij == 0.0) continue;
      const double* row =
          &c.tensor[static_cast<std::size_t>(i) * n * n + j * n];
      double inner = 0.0;
      for (int k = 0; k < n; ++k) inner += row[k] * p(k);
      total += pij * inner;
    }
  }
  return total;
}

}  // namespace qplex
