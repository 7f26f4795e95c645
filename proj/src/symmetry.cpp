#include "qplex/symmetry.hpp"

#include <cmath>

namespace qplex {

StretchedMatrix stretch(const MeasurementMatrix& r,
                        const DimensionParams& params) {
  if (r.outcomes() != params.n || r.inputs() != params.n)
    throw Error("stretch: measurement must be N x N");
  const RMat& m = r.mat();
  StretchedMatrix out;
  out.n = params.n;
  out.entries = (params.d + 1.0) * m;
  const RVec row_sums = m.rowwise().sum();
  out.entries.colwise() -= row_sums / params.d;
  return out;
}

UnstretchResult unstretch(const StretchedMatrix& r,
                          const DimensionParams& params) {
  if (r.entries.rows() != params.n || r.entries.cols() != params.n)
    throw Error("unstretch: matrix must be N x N");
  RMat cond = r.entries;
  const RVec row_sums = r.entries.rowwise().sum();
  cond.colwise() += row_sums / params.d;
  cond /= params.d + 1.0;
  UnstretchResult out;
  out.min_entry = cond.minCoeff();
  out.valid = out.min_entry >= -kTolProb;
  out.conditionals = std::move(cond);
  return out;
}

StretchedReport verify_stretched(const StretchedMatrix& r,
                                 const DimensionParams& params, double tol) {
  const int n = params.n;
  if (r.entries.rows() != n || r.entries.cols() != n)
    throw Error("verify_stretched: matrix must be N x N");
  StretchedReport rep;
  RMat gram = r.entries * r.entries.transpose();
  gram.diagonal().array() -= 1.0;
  rep.orthogonality_defect = gram.cwiseAbs().maxCoeff();
  const RVec c = RVec::Constant(n, 1.0 / n);
  rep.barycenter_defect = (r.entries * c - c).cwiseAbs().maxCoeff();
  rep.entry_bound_violation =
      std::max(0.0, -1.0 / params.d - r.entries.minCoeff());
  rep.row_sum_defect =
      (r.entries.rowwise().sum().array() - 1.0).abs().maxCoeff();
  rep.col_sum_defect =
      (r.entries.colwise().sum().array() - 1.0).abs().maxCoeff();
  // Measurement simplex: s_i(j) = (R_ij + 1/d)/(d+1).
  const QplexGeometry geom = make_geometry(params);
  rep.simplex_norm_defect = 0.0;
  rep.simplex_regularity_defect = 0.0;
  const double expected_cross =
      (params.d + 2.0) / (params.d * (params.d + 1.0) * (params.d + 1.0));
  rep.simplex.vertices.reserve(n);
  for (int i = 0; i < n; ++i) {
    RVec s = (r.entries.row(i).transpose().array() + 1.0 / params.d) /
             (params.d + 1.0);
    rep.simplex.vertices.push_back(std::move(s));
  }
  for (int i = 0; i < n; ++i) {
    const double norm_sq =
        (rep.simplex.vertices[i] - geom.c).squaredNorm();
    rep.simplex_norm_defect =
        std::max(rep.simplex_norm_defect, std::abs(norm_sq - geom.r_out_sq));
    for (int j = i + 1; j < n; ++j) {
      const double inner =
          rep.simplex.vertices[i].dot(rep.simplex.vertices[j]);
      rep.simplex_regularity_defect = std::max(
          rep.simplex_regularity_defect, std::abs(inner - expected_cross));
    }
  }
  rep.pass = rep.orthogonality_defect < tol && rep.barycenter_defect < tol &&
             rep.entry_bound_violation < tol && rep.row_sum_defect < tol &&
             rep.col_sum_defect < tol && rep.simplex_norm_defect < tol &&
             rep.simplex_regularity_defect < tol;
  return rep;
}

StretchedMatrix stretched_from_unitary(
    const UnitaryOperator& u, const std::vector<HermitianOperator>& ops,
    const DimensionParams& params) {
  const int d = params.d;
  const int n = params.n;
  if (u.dim() != d) throw Error("stretched_from_unitary: dimension mismatch");
  if (static_cast<int>(ops.size()) != n)
    throw Error("stretched_from_unitary: expected d^2 operators");
  std::vector<Mat> conjugated(n);
  for (int j = 0; j < n; ++j)
    conjugated[j] = u.mat() * ops[j].mat() * u.mat().adjoint();
  StretchedMatrix out;
  out.n = n;
  out.entries.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out.entries(i, j) =
          (d + 1.0) / d * (ops[i].mat() * conjugated[j]).trace().real() -
          1.0 / d;
  return out;
}

StretchedMatrix stretched_from_unitary(const UnitaryOperator& u,
                                       const SicSystem& system,
                                       const DimensionParams& params) {
  return stretched_from_unitary(u, system.projectors, params);
}

StretchedMatrix stretched_from_unitary(const UnitaryOperator& u,
                                       const QuasiSic& system,
                                       const DimensionParams& params) {
  return stretched_from_unitary(u, system.operators, params);
}

StretchedMatrix stretched_from_antiunitary(const UnitaryOperator& u,
                                           const SicSystem& system,
                                           const DimensionParams& params) {
  // K Pi K = conj(Pi) entrywise; the transfer of U K uses
  // U conj(Pi_j) U^dag in place of U Pi_j U^dag.
  std::vector<HermitianOperator> conj_ops;
  conj_ops.reserve(system.projectors.size());
  for (const auto& p : system.projectors)
    conj_ops.emplace_back(Mat(p.mat().conjugate()));
  const int d = params.d;
  const int n = params.n;
  std::vector<Mat> conjugated(n);
  for (int j = 0; j < n; ++j)
    conjugated[j] = u.mat() * conj_ops[j].mat() * u.mat().adjoint();
  StretchedMatrix out;
  out.n = n;
  out.entries.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out.entries(i, j) = (d + 1.0) / d *
                              (system.projectors[i].mat() * conjugated[j])
                                  .trace()
                                  .real() -
                          1.0 / d;
  return out;
}

ImageReport image_membership(const StretchedMatrix& r, const PointSet& sample,
                             const SicSystem& system,
                             const DimensionParams& params) {
  (void)params;
  const TripleProducts triples = triple_products(system);
  ImageReport rep{0, 0, 0.0};
  for (const RVec& p : sample.points) {
    const RVec image = r.entries * p;
    ++rep.total;
    if (image.minCoeff() < -kTolProb) continue;  // left the simplex
    const StateValidity v = validate_state_vector(ProbVector(image), system,
                                                  triples);
    if (v.quantum_state) ++rep.valid_images;
  }
  rep.fraction = rep.total == 0
                     ? 1.0
                     : static_cast<double>(rep.valid_images) / rep.total;
  return rep;
}

ClosureReport group_closure_check(const std::vector<StretchedMatrix>& sample,
                                  const DimensionParams& params,
                                  int n_products, std::uint64_t seed) {
  ClosureReport rep{true, 0, {}, 0.0};
  auto defect = [&](const StretchedMatrix& m) {
    const StretchedReport r = verify_stretched(m, params);
    return std::max({r.orthogonality_defect, r.barycenter_defect,
                     r.entry_bound_violation, r.row_sum_defect,
                     r.col_sum_defect});
  };
  for (int i = 0; i < static_cast<int>(sample.size()); ++i) {
    const double d = defect(sample[i]);
    rep.worst_defect = std::max(rep.worst_defect, d);
    if (d >= kTolSym) {
      rep.pass = false;
      rep.bad_elements.push_back(i);
    }
  }
  if (!rep.bad_elements.empty()) return rep;  // flag inputs before products
  Rng rng(seed);
  for (int t = 0; t < n_products; ++t) {
    const int i = static_cast<int>(rng.next_u64() % sample.size());
    const int j = static_cast<int>(rng.next_u64() % sample.size());
    StretchedMatrix prod{params.n, sample[i].entries * sample[j].entries};
    double d = defect(prod);
    StretchedMatrix transp{params.n, sample[i].entries.transpose()};
    d = std::max(d, defect(transp));
    rep.worst_defect = std::max(rep.worst_defect, d);
    ++rep.products_checked;
    if (d >= kTolSym) rep.pass = false;
  }
  return rep;
}

}  // namespace qplex
