#include "qplex/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace qplex {

QplexGeometry make_geometry(const DimensionParams& params) {
  QplexGeometry g;
  g.params = params;
  const int n = params.n;
  g.c = RVec::Constant(n, 1.0 / n);
  g.basis.resize(n, n);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i)
      g.basis(i, k) = ((i == k ? 1.0 : 0.0) + params.beta) / params.alpha;
  }
  g.r_out_sq = (n - 1.0) / (n * params.alpha * params.alpha);
  g.r_in_sq = 1.0 / (n * (n - 1.0));
  g.r_mid_sq = 1.0 / (n * params.alpha);
  return g;
}

void PointSet::add(RVec p, std::string label) {
  if (dimension == 0) dimension = static_cast<int>(p.size());
  if (p.size() != dimension)
    throw Error("PointSet: inconsistent point dimension");
  points.push_back(std::move(p));
  labels.push_back(std::move(label));
}

PairVerdict check_pair(const RVec& p, const RVec& s,
                       const DimensionParams& params, double tol) {
  if (p.size() != s.size()) throw Error("check_pair: length mismatch");
  PairVerdict v;
  v.inner = p.dot(s);
  v.consistent =
      v.inner >= params.lower - tol && v.inner <= params.upper + tol;
  return v;
}

ConsistencyReport is_germ(const PointSet& set, const DimensionParams& params,
                          double tol) {
  ConsistencyReport rep;
  const int n = static_cast<int>(set.points.size());
  if (n == 0) return rep;
  rep.min_inner = std::numeric_limits<double>::infinity();
  rep.max_inner = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double inner = set.points[i].dot(set.points[j]);
      rep.min_inner = std::min(rep.min_inner, inner);
      rep.max_inner = std::max(rep.max_inner, inner);
      if (inner < params.lower - tol || inner > params.upper + tol) {
        rep.pass = false;
        rep.violations.push_back({i, j, inner});
      }
    }
  }
  return rep;
}

bool polar_membership(const RVec& u, const PointSet& set,
                      const DimensionParams& params, double tol) {
  if (std::abs(u.sum() - 1.0) > kTolProb * params.n)
    throw Error("polar_membership: vector not in the hyperplane H");
  for (const RVec& v : set.points) {
    if (u.dot(v) < params.lower - tol) return false;
  }
  return true;
}

RVec polar_point(const RVec& s, const QplexGeometry& geom) {
  const RVec delta = s - geom.c;
  const double norm_sq = delta.squaredNorm();
  if (norm_sq < 1e-28) throw Error("polar_point: s equals the barycenter");
  const double scale =
      std::sqrt(geom.r_out_sq * geom.r_in_sq) / norm_sq;
  return geom.c - scale * delta;
}

double polar_hyperplane_gap(const RVec& u, const RVec& s,
                            const DimensionParams& params) {
  if (u.size() != s.size())
    throw Error("polar_hyperplane_gap: length mismatch");
  return u.dot(s) - params.lower;
}

BoundsReport vector_bounds(const RVec& p, const DimensionParams& params,
                           double tol) {
  BoundsReport rep;
  rep.max_entry = p.maxCoeff();
  rep.zero_count = 0;
  for (int i = 0; i < p.size(); ++i)
    if (std::abs(p(i)) <= tol) ++rep.zero_count;
  const double bound = 1.0 / params.d;
  rep.max_entry_ok = rep.max_entry <= bound + tol;
  rep.zero_count_ok = rep.zero_count <= params.d * (params.d - 1) / 2;
  rep.saturation_case = std::abs(rep.max_entry - bound) <= 1e-12;
  rep.saturation_flatness = 0.0;
  if (rep.saturation_case) {
    int argmax = 0;
    p.maxCoeff(&argmax);
    const double flat = params.lower;  // 1/(d(d+1))
    for (int i = 0; i < p.size(); ++i) {
      if (i == argmax) continue;
      rep.saturation_flatness =
          std::max(rep.saturation_flatness, std::abs(p(i) - flat));
    }
  }
  return rep;
}

bool envelope_membership(const RVec& p, const QplexGeometry& geom,
                         double tol) {
  if (p.minCoeff() < -tol) return false;
  if (std::abs(p.sum() - 1.0) > tol * geom.params.n) return false;
  return (p - geom.c).squaredNorm() <= geom.r_out_sq + tol;
}

namespace {

// Euclidean projection onto the probability simplex.
RVec project_simplex(const RVec& v) {
  const int n = static_cast<int>(v.size());
  std::vector<double> u(v.data(), v.data() + n);
  std::sort(u.begin(), u.end(), std::greater<>());
  double css = 0.0, theta = 0.0;
  int rho = 0;
  for (int i = 0; i < n; ++i) {
    css += u[i];
    const double t = (css - 1.0) / (i + 1);
    if (u[i] - t > 0) {
      rho = i + 1;
      theta = t;
    }
  }
  (void)rho;
  return (v.array() - theta).cwiseMax(0.0);
}

RVec project_ball(const RVec& t, const RVec& center, double radius) {
  const RVec delta = t - center;
  const double norm = delta.norm();
  if (norm <= radius) return t;
  return center + (radius / norm) * delta;
}

}  // namespace

StemVerdict stem_membership(const RVec& p, const QplexGeometry& geom,
                            double tol, int max_iter) {
  const int n = geom.params.n;
  if (p.size() != n) throw Error("stem_membership: length mismatch");
  const double r_in = std::sqrt(geom.r_in_sq);
  StemVerdict v;
  v.lambda = 0.5;
  v.weights = RVec::Constant(n, 1.0 / n);
  v.y = geom.c;
  // Lipschitz constant of the w-subproblem gradient.
  const double lmax =
      Eigen::SelfAdjointEigenSolver<RMat>(geom.basis.transpose() * geom.basis)
          .eigenvalues()
          .maxCoeff();
  double residual = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < max_iter; ++iter) {
    const RVec a = geom.basis * v.weights;
    // y-step: closed-form projection onto the in-ball.
    if (v.lambda < 1.0 - 1e-12) {
      const RVec target = (p - v.lambda * a) / (1.0 - v.lambda);
      v.y = project_ball(target, geom.c, r_in);
    }
    // lambda-step: exact 1D quadratic minimization.
    const RVec diff = a - v.y;
    const double denom = diff.squaredNorm();
    if (denom > 1e-28) {
      v.lambda = std::clamp((p - v.y).dot(diff) / denom, 0.0, 1.0);
    }
    // w-step: one projected gradient step.
    if (v.lambda > 1e-12) {
      const RVec t = p - (1.0 - v.lambda) * v.y;
      const RVec grad =
          v.lambda * geom.basis.transpose() * (v.lambda * a - t);
      const double step = 1.0 / (v.lambda * v.lambda * lmax);
      v.weights = project_simplex(v.weights - step * grad);
    }
    residual =
        (p - v.lambda * geom.basis * v.weights - (1.0 - v.lambda) * v.y)
            .norm();
    if (residual < tol * 0.1) break;
  }
  v.residual = residual;
  if (residual < tol)
    v.status = StemVerdict::Status::kMember;
  else if (residual > 10.0 * tol)
    v.status = StemVerdict::Status::kNonMember;
  else
    v.status = StemVerdict::Status::kIndeterminate;
  return v;
}

namespace {

// Maximal-clique enumeration on <= 64 vertices via bitmask recursion.
void cliques_recurse(const std::vector<std::uint64_t>& adj, std::uint64_t r,
                     std::uint64_t p, std::uint64_t x,
                     std::vector<std::uint64_t>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  std::uint64_t candidates = p;
  while (candidates) {
    const int v = std::countr_zero(candidates);
    const std::uint64_t bit = 1ULL << v;
    candidates &= ~bit;
    cliques_recurse(adj, r | bit, p & adj[v], x & adj[v], out);
    p &= ~bit;
    x |= bit;
  }
}

}  // namespace

std::vector<std::vector<int>> find_mmd_sets(const PointSet& set,
                                            const DimensionParams& params,
                                            double tol) {
  const int n = static_cast<int>(set.points.size());
  std::vector<std::vector<int>> result;
  if (n == 0) return result;
  auto saturates = [&](int i, int j) {
    return std::abs(set.points[i].dot(set.points[j]) - params.lower) <= tol;
  };
  if (n <= 64) {
    std::vector<std::uint64_t> adj(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && saturates(i, j)) adj[i] |= 1ULL << j;
    std::vector<std::uint64_t> cliques;
    const std::uint64_t all = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
    cliques_recurse(adj, 0, all, 0, cliques);
    for (std::uint64_t mask : cliques) {
      std::vector<int> subset;
      for (int i = 0; i < n; ++i)
        if (mask & (1ULL << i)) subset.push_back(i);
      result.push_back(std::move(subset));
    }
  } else {
    // Greedy maximal expansion from each start vertex, in input order;
    // complete enumeration is only guaranteed for <= 64 points.
    std::set<std::vector<int>> seen;
    for (int start = 0; start < n; ++start) {
      std::vector<int> subset{start};
      for (int cand = 0; cand < n; ++cand) {
        if (cand == start) continue;
        bool ok = true;
        for (int member : subset)
          if (!saturates(member, cand)) {
            ok = false;
            break;
          }
        if (ok) subset.push_back(cand);
      }
      std::sort(subset.begin(), subset.end());
      if (seen.insert(subset).second) result.push_back(subset);
    }
  }
  return result;
}

}  // namespace qplex
