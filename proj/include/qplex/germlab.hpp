#pragma once

#include "qplex/geometry.hpp"

namespace qplex {

/// Accepted points of a region-ordered consistency growth run.
struct GrowthState {
  int d = 0;
  PointSet accepted;
  int rejected = 0;
  int regions_processed = 0;
  std::uint64_t seed = 0;
};

/// Generalized urgleichung constants with the quantum-point flags.
GeneralParams generalized_params(int n, double alpha);

/// p_theta = c + cos(theta) (e_1 - c) + sin(theta) (e_2 - c); lies on
/// the out-sphere for every theta.
RVec theta_family(const QplexGeometry& geom, double theta);

/// Samples candidates from the simplex intersected with the out-ball,
/// processes them region by region in lexicographic permutation order,
/// and accepts each candidate consistent with all accepted points.
GrowthState grow_sorted_qplex(int d, int n_candidates, std::uint64_t seed,
                              double tol = kTolProb, int max_regions = 0);

struct EigProfile {
  RVec values;
  double sum() const { return values.sum(); }
  double sum_sq() const { return values.squaredNorm(); }
};

struct LemmaVerdict {
  double product;  // sum_i lambda_up(i) * lambda_down(i)
  bool nonpositive;
  bool equality_case;
  enum class Family { kNone, kProjector, kComplement } family;
};

/// For eigenvalues with sum = sum of squares = 1, the ascending/
/// descending pairing product must be <= 0; equality holds only for
/// the (1,0,...,0) and (2/d,...,2/d,2/d-1) spectra.
LemmaVerdict spectra_lemma_check(const EigProfile& profile, double tol = 1e-9);

/// Random point on the constraint variety sum = sum of squares = 1.
EigProfile sample_constraint_variety(int d, Rng& rng);

/// Effective population size 1/<p,p>.
double n_eff(const RVec& p);
/// Joint effective size <p,s>/(<p,p><s,s>).
double n_eff_pair(const RVec& p, const RVec& s);

}  // namespace qplex
