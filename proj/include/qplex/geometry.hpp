#pragma once

#include <string>
#include <vector>

#include "qplex/rep.hpp"

namespace qplex {

/// Barycenter, basis distributions and the three distinguished spheres.
struct QplexGeometry {
  DimensionParams params;
  RVec c;            // barycenter, entries 1/N
  RMat basis;        // column k = basis distribution e_k
  double r_out_sq;   // (N-1)/(N alpha^2)
  double r_in_sq;    // 1/(N(N-1))
  double r_mid_sq;   // 1/(N alpha)
};

QplexGeometry make_geometry(const DimensionParams& params);

struct PointSet {
  int dimension = 0;  // N
  std::vector<RVec> points;
  std::vector<std::string> labels;  // optional, parallel to points

  void add(RVec p, std::string label = {});
};

struct PairVerdict {
  double inner;
  bool consistent;
};

/// Both fundamental inequalities, L - tol <= <p,s> <= U + tol.
PairVerdict check_pair(const RVec& p, const RVec& s,
                       const DimensionParams& params, double tol = kTolProb);

struct ConsistencyReport {
  bool pass = true;
  struct Violation {
    int i, j;       // i == j for self-pairs
    double inner;
  };
  std::vector<Violation> violations;
  double min_inner = 0.0;
  double max_inner = 0.0;
};

/// Checks every pair including self-pairs.
ConsistencyReport is_germ(const PointSet& set, const DimensionParams& params,
                          double tol = kTolProb);

/// True iff <u,v> >= 1/(d(d+1)) - tol for every v in the set; u must
/// lie in the hyperplane H (entries may be negative).
bool polar_membership(const RVec& u, const PointSet& set,
                      const DimensionParams& params, double tol = kTolProb);

/// c - (r_o r_i / |s-c|^2)(s - c); an involution mapping S_o <-> S_i.
RVec polar_point(const RVec& s, const QplexGeometry& geom);

/// <u,s> - 1/(d(d+1)); zero iff u lies on the polar hyperplane of s.
double polar_hyperplane_gap(const RVec& u, const RVec& s,
                            const DimensionParams& params);

struct BoundsReport {
  double max_entry;
  int zero_count;
  bool max_entry_ok;    // <= 1/d + tol
  bool zero_count_ok;   // <= d(d-1)/2
  bool saturation_case; // max entry = 1/d within tol
  double saturation_flatness;  // max dev of remaining entries from 1/(d(d+1))
};

BoundsReport vector_bounds(const RVec& p, const DimensionParams& params,
                           double tol = kTolProb);

/// p in the principal envelope: inside the simplex and the out-ball.
bool envelope_membership(const RVec& p, const QplexGeometry& geom,
                         double tol = kTolProb);

struct StemVerdict {
  enum class Status { kMember, kNonMember, kIndeterminate } status;
  double residual;
  double lambda;
  RVec weights;  // over the N basis distributions
  RVec y;        // in-ball component
  bool member() const { return status == Status::kMember; }
};

/// Feasibility search for p = lambda * (basis mixture) + (1-lambda) * y
/// with y in the in-ball, by alternating minimization.  Residuals in
/// [tol, 10 tol] are reported as indeterminate.
StemVerdict stem_membership(const RVec& p, const QplexGeometry& geom,
                            double tol = 1e-8, int max_iter = 2000);

/// Maximal subsets of the point set whose pairwise inner products all
/// equal L within tol.  Candidates are expected on the out-sphere;
/// completeness guaranteed for |set| <= 64.
std::vector<std::vector<int>> find_mmd_sets(const PointSet& set,
                                            const DimensionParams& params,
                                            double tol = 1e-9);

}  // namespace qplex
