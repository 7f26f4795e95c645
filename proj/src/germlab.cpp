#include "qplex/germlab.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace qplex {

GeneralParams generalized_params(int n, double alpha) {
  return GeneralParams::make(n, alpha);
}

RVec theta_family(const QplexGeometry& geom, double theta) {
  return geom.c + std::cos(theta) * (geom.basis.col(0) - geom.c) +
         std::sin(theta) * (geom.basis.col(1) - geom.c);
}

namespace {

// Region key: the permutation sorting p into non-increasing order,
// ties broken by index.
std::vector<int> region_of(const RVec& p) {
  std::vector<int> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](int a, int b) { return p(a) > p(b); });
  return perm;
}

}  // namespace

GrowthState grow_sorted_qplex(int d, int n_candidates, std::uint64_t seed,
                              double tol, int max_regions) {
  const DimensionParams params = DimensionParams::make(d);
  const QplexGeometry geom = make_geometry(params);
  const int n = params.n;
  Rng rng(seed);
  Rng sampler = rng.derived(0);
  // Symmetric-Dirichlet(1) draws via normalized exponentials, filtered
  // to the out-ball.
  std::map<std::vector<int>, std::vector<RVec>> regions;
  int kept = 0;
  for (int t = 0; t < n_candidates; ++t) {
    RVec p(n);
    for (int i = 0; i < n; ++i)
      p(i) = -std::log(1.0 - sampler.uniform());
    p /= p.sum();
    if ((p - geom.c).squaredNorm() > geom.r_out_sq) continue;
    regions[region_of(p)].push_back(std::move(p));
    ++kept;
  }
  std::vector<std::vector<int>> order;
  order.reserve(regions.size());
  for (const auto& [key, pts] : regions) order.push_back(key);
  // std::map iterates keys lexicographically already; optionally thin
  // to a random subset of regions for large d.
  if (max_regions > 0 && static_cast<int>(order.size()) > max_regions) {
    Rng chooser = rng.derived(1);
    std::vector<std::vector<int>> chosen;
    std::vector<int> idx(order.size());
    std::iota(idx.begin(), idx.end(), 0);
    for (int k = 0; k < max_regions; ++k) {
      const int pick =
          k + static_cast<int>(chooser.next_u64() % (idx.size() - k));
      std::swap(idx[k], idx[pick]);
    }
    idx.resize(max_regions);
    std::sort(idx.begin(), idx.end());
    for (int i : idx) chosen.push_back(order[i]);
    order = std::move(chosen);
  }
  GrowthState state;
  state.d = d;
  state.seed = seed;
  state.accepted.dimension = n;
  for (const auto& key : order) {
    ++state.regions_processed;
    for (const RVec& p : regions.at(key)) {
      bool ok = true;
      for (const RVec& a : state.accepted.points) {
        const double inner = p.dot(a);
        if (inner < params.lower - tol || inner > params.upper + tol) {
          ok = false;
          break;
        }
      }
      if (ok)
        state.accepted.add(p);
      else
        ++state.rejected;
    }
  }
  (void)kept;
  return state;
}

LemmaVerdict spectra_lemma_check(const EigProfile& profile, double tol) {
  const int d = static_cast<int>(profile.values.size());
  if (d < 2) throw Error("spectra_lemma_check: need at least 2 eigenvalues");
  if (std::abs(profile.sum() - 1.0) > tol ||
      std::abs(profile.sum_sq() - 1.0) > tol)
    throw Error("spectra_lemma_check: eigenvalues not on the constraint "
                "variety (sum and sum of squares must both equal 1)");
  RVec asc = profile.values;
  std::sort(asc.data(), asc.data() + d);
  LemmaVerdict v;
  v.product = 0.0;
  for (int i = 0; i < d; ++i) v.product += asc(i) * asc(d - 1 - i);
  v.nonpositive = v.product <= tol;
  v.equality_case = std::abs(v.product) <= tol;
  v.family = LemmaVerdict::Family::kNone;
  if (v.equality_case) {
    const RVec desc = asc.reverse();
    bool projector = std::abs(desc(0) - 1.0) < 1e-7;
    for (int i = 1; projector && i < d; ++i)
      projector = std::abs(desc(i)) < 1e-7;
    if (projector) {
      v.family = LemmaVerdict::Family::kProjector;
    } else {
      bool complement = std::abs(desc(d - 1) - (2.0 / d - 1.0)) < 1e-7;
      for (int i = 0; complement && i < d - 1; ++i)
        complement = std::abs(desc(i) - 2.0 / d) < 1e-7;
      if (complement) v.family = LemmaVerdict::Family::kComplement;
    }
  }
  return v;
}

EigProfile sample_constraint_variety(int d, Rng& rng) {
  if (d < 2) throw Error("sample_constraint_variety: d must be >= 2");
  // Gaussian direction projected onto the zero-sum hyperplane, rescaled
  // so that sum = sum of squares = 1.
  RVec u(d);
  double norm = 0.0;
  do {
    for (int i = 0; i < d; ++i) u(i) = rng.gaussian();
    u.array() -= u.mean();
    norm = u.norm();
  } while (norm < 1e-3);  // rejection keeps the direction uniform
  u /= norm;
  // Re-center and renormalize once so the constraints hold to machine
  // precision even after the division.
  u.array() -= u.mean();
  u /= u.norm();
  EigProfile p;
  p.values = RVec::Constant(d, 1.0 / d) + std::sqrt((d - 1.0) / d) * u;
  return p;
}

double n_eff(const RVec& p) {
  const double sq = p.squaredNorm();
  if (sq <= 0.0) throw Error("n_eff: zero vector");
  return 1.0 / sq;
}

double n_eff_pair(const RVec& p, const RVec& s) {
  if (p.size() != s.size()) throw Error("n_eff_pair: length mismatch");
  const double psq = p.squaredNorm();
  const double ssq = s.squaredNorm();
  if (psq <= 0.0 || ssq <= 0.0) throw Error("n_eff_pair: zero vector");
  return p.dot(s) / (psq * ssq);
}

}  // namespace qplex
