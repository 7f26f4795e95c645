// qplex: SIC representation toolkit command-line front end.
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 usage or input
// error.  Randomized commands print their effective seed.

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>

#include "qplex/doc.hpp"
#include "qplex/geometry.hpp"
#include "qplex/germlab.hpp"
#include "qplex/rep.hpp"
#include "qplex/sic.hpp"
#include "qplex/symmetry.hpp"

namespace {

using namespace qplex;

struct RunReport {
  std::string command;
  Json checks = Json::array();
  bool pass = true;

  void add(const std::string& name, bool ok, double value) {
    Json c;
    c["name"] = name;
    c["pass"] = ok;
    c["value"] = value;
    checks.push_back(std::move(c));
    pass = pass && ok;
  }
  void add(const std::string& name, bool ok) {
    Json c;
    c["name"] = name;
    c["pass"] = ok;
    checks.push_back(std::move(c));
    pass = pass && ok;
  }
  void note(const std::string& key, const Json& value) {
    Json c;
    c["name"] = key;
    c["info"] = value;
    checks.push_back(std::move(c));
  }
};

struct Options {
  int dim = 0;
  std::uint64_t seed = 1;
  double tol = 1e-8;
  int max_iter = 0;
  std::string in, out, aux;
  bool verify = false;
  bool quiet = false;
};

int finish(const RunReport& rep, const Options& opt, double wall_s,
           int dim) {
  if (!opt.quiet) {
    Json j;
    j["command"] = rep.command;
    j["checks"] = rep.checks;
    j["pass"] = rep.pass;
    j["wall_seconds"] = wall_s;
    std::cout << j.dump(2) << "\n";
  }
  if (!opt.out.empty() && rep.command != "sic find" &&
      rep.command.rfind("rep ", 0) != 0 && rep.command != "germ grow" &&
      rep.command != "sym stretch" && rep.command != "geom polar") {
    Json body;
    body["command"] = rep.command;
    body["checks"] = rep.checks;
    body["pass"] = rep.pass;
    save_document(report_document(body, dim, make_meta(opt.seed, opt.tol)),
                  opt.out);
  }
  return rep.pass ? 0 : 1;
}

SicSystem obtain_sic(const Options& opt) {
  if (!opt.aux.empty()) {
    const Document doc = load_document(opt.aux);
    if (doc.kind == DocKind::kFiducial)
      return sic_from_fiducial(fiducial_from_document(doc));
    return sic_system_from_document(doc);
  }
  if (opt.dim <= 0) throw Error("need --dim or --sic");
  const FiducialSearchResult res =
      find_sic_fiducial(opt.dim, opt.seed, 1e-13, 50);
  if (!res.fiducial)
    throw Error("internal fiducial search failed for d=" +
                std::to_string(opt.dim));
  return sic_from_fiducial(*res.fiducial);
}

// ---- sic ----

int cmd_sic_find(const Options& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport rep;
  rep.command = "sic find";
  std::cout << "effective seed: " << opt.seed << "\n";
  const int restarts = opt.max_iter > 0 ? opt.max_iter : 50;
  const FiducialSearchResult res =
      find_sic_fiducial(opt.dim, opt.seed, opt.tol, restarts);
  rep.add("defect_below_tol", res.fiducial.has_value(), res.best_defect);
  rep.note("restarts_used", res.restarts_used);
  if (res.fiducial) {
    const SicSystem sys = sic_from_fiducial(*res.fiducial);
    const SicVerification v = verify_sic(sys);
    rep.add("overlaps", v.pass, v.max_overlap_dev);
    if (!opt.out.empty())
      save_document(
          fiducial_document(*res.fiducial, make_meta(opt.seed, opt.tol)),
          opt.out);
  }
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return finish(rep, opt, wall, opt.dim);
}

int cmd_sic_verify(const Options& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport rep;
  rep.command = "sic verify";
  const Document doc = load_document(opt.in);
  SicSystem sys = doc.kind == DocKind::kFiducial
                      ? sic_from_fiducial(fiducial_from_document(doc))
                      : sic_system_from_document(doc);
  const SicVerification v = verify_sic(sys, opt.tol);
  rep.add("trace", v.max_trace_dev < opt.tol, v.max_trace_dev);
  rep.add("idempotency", v.max_idempotency < opt.tol, v.max_idempotency);
  rep.add("overlaps", v.max_overlap_dev < opt.tol, v.max_overlap_dev);
  rep.add("resolution_of_identity", v.max_resolution_dev < opt.tol,
          v.max_resolution_dev);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return finish(rep, opt, wall, doc.dim);
}

int cmd_sic_quasi(const Options& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport rep;
  rep.command = "sic quasi";
  const QuasiSic q = build_quasi_sic(opt.dim);
  const QuasiSicVerification v = verify_quasi_sic(q, opt.tol);
  rep.add("trace", v.max_trace_dev < opt.tol, v.max_trace_dev);
  rep.add("overlaps", v.max_overlap_dev < opt.tol, v.max_overlap_dev);
  rep.note("min_eigenvalue", v.min_eigenvalue);
  rep.note("positive_semidefinite", v.min_eigenvalue > -kTolPsd);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return finish(rep, opt, wall, opt.dim);
}

// ---- rep ----

int cmd_rep_to_prob(const Options& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport rep;
  rep.command = "rep to-prob";
  std::cout << "effective seed: " << opt.seed << "\n";
  const SicSystem sys = obtain_sic(opt);
  const int d = sys.dim;
  const int rank = opt.max_iter > 0 ? std::min(opt.max_iter, d) : d;
  const DensityOperator rho = random_density(d, rank, opt.seed + 0x9e3779b9);
  const ProbVector p = state_to_prob(rho, sys);
  const TripleProducts triples = triple_products(sys);
  const StateValidity v = validate_state_vector(p, sys, triples);
  rep.add("quantum_state", v.quantum_state, v.min_eigenvalue);
  rep.note("quadratic_residual", v.quadratic_residual);
  rep.note("pure_state", v.pure_state);
  if (!opt.out.empty())
    save_document(
        prob_vector_document(p.vec(), d, make_meta(opt.seed, opt.tol)),
        opt.out);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return finish(rep, opt, wall, d);
}

int cmd_rep_to_op(const Options& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport rep;
  rep.command = "rep to-op";
  const Document doc = load_document(opt.in);
  const RVec raw = prob_vector_from_document(doc);
  const SicSystem sys = obtain_sic(opt);
  if (sys.dim != doc.dim) throw Error("dimension mismatch between inputs");
  const ProbVector p(raw);
  const TripleProducts triples = triple_products(sys);
  const StateValidity v = validate_state_vector(p, sys, triples);
  rep.add("quantum_state", v.quantum_state, v.min_eigenvalue);
  rep.note("quadratic_residual", v.quadratic_residual);
  rep.note("cubic_residual", v.cubic_residual);
  rep.note("pure_state", v.pure_state);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return finish(rep, opt, wall, doc.dim);
}

int cmd_rep_urgleichung(const Options& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport rep;
  rep.command = "rep urgleichung";
  const Document pdoc = load_document(opt.in);
  const Document mdoc = load_document(opt.aux);
  if (pdoc.dim != mdoc.dim) throw Error("dimension mismatch between inputs");
  const ProbVector p(prob_vector_from_document(pdoc));
  const MeasurementMatrix r = measurement_from_document(mdoc);
  const DimensionParams params = DimensionParams::make(pdoc.dim);
  const UrgleichungResult res = urgleichung(p, r, params);
  rep.add("consistent", res.consistent, res.min_entry);
  if (!opt.out.empty() && res.consistent)
    save_document(prob_vector_document(res.prob()->vec(), pdoc.dim,
                                       make_meta(opt.seed, opt.tol)),
                  opt.out);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return finish(rep, opt, wall, pdoc.dim);
}

int cmd_rep_evolve(const Options& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport rep;
  rep.command = "rep evolve";
  std::cout << "effective seed: " << opt.seed << "\n";
  const Document pdoc = load_document(opt.in);
  const ProbVector p(prob_vector_from_document(pdoc));
  Options sic_opt = opt;
  sic_opt.dim = pdoc.dim;
  const SicSystem sys = obtain_sic(sic_opt);
  if (sys.dim != pdoc.dim) throw Error("dimension mismatch between inputs");
  const UnitaryOperator u = haar_unitary(pdoc.dim, opt.seed + 0x51cafe);
  const ProbVector q = evolve(p, u, sys);
  const TripleProducts triples = triple_products(sys);
  const StateValidity v = validate_state_vector(q, sys, triples);
  rep.add("image_quantum_state", v.quantum_state, v.min_eigenvalue);
  if (!opt.out.empty())
    save_document(prob_vector_document(q.vec(), pdoc.dim,
                                       make_meta(opt.seed, opt.tol)),
                  opt.out);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return finish(rep, opt, wall, pdoc.dim);
}

// ---- geom ----

int cmd_geom_check_germ(const Options& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport rep;
  rep.command = "geom check-germ";
  const Document doc = load_document(opt.in);
  const PointSet set = point_set_from_document(doc);
  const DimensionParams params = DimensionParams::make(doc.dim);
  const ConsistencyReport r = is_germ(set, params, opt.tol);
  rep.add("pairwise_consistent", r.pass);
  rep.note("min_inner", r.min_inner);
  rep.note("max_inner", r.max_inner);
  rep.note("violations", r.violations.size());
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return finish(rep, opt, wall, doc.dim);
}

int cmd_geom_polar(const Options& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport rep;
  rep.command = "geom polar";
  const Document doc = load_document(opt.in);
  const PointSet set = point_set_from_document(doc);
  const DimensionParams params = DimensionParams::make(doc.dim);
  const QplexGeometry geom = make_geometry(params);
  PointSet polars;
  polars.dimension = params.n;
  double worst = 0.0;
  for (const RVec& s : set.points) {
    const RVec u = polar_point(s, geom);
    const RVec back = polar_point(u, geom);
    worst = std::max(worst, (back - s).cwiseAbs().maxCoeff());
    polars.add(u);
  }
  rep.add("involution", worst < 1e-10, worst);
  if (!opt.out.empty())
    save_document(point_set_document(polars, doc.dim,
                                     make_meta(opt.seed, opt.tol)),
                  opt.out);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return finish(rep, opt, wall, doc.dim);
}

int cmd_geom_mmd(const Options& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport rep;
  rep.command = "geom mmd";
  const Document doc = load_document(opt.in);
  const PointSet set = point_set_from_document(doc);
  const DimensionParams params = DimensionParams::make(doc.dim);
  const auto sets = find_mmd_sets(set, params);
  std::size_t largest = 0;
  for (const auto& s : sets) largest = std::max(largest, s.size());
  rep.add("size_at_most_d", largest <= static_cast<std::size_t>(doc.dim),
          static_cast<double>(largest));
  rep.note("mmd_sets_found", sets.size());
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return finish(rep, opt, wall, doc.dim);
}

int cmd_geom_stem(const Options& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport rep;
  rep.command = "geom stem";
  const Document doc = load_document(opt.in);
  const PointSet set = point_set_from_document(doc);
  const DimensionParams params = DimensionParams::make(doc.dim);
  const QplexGeometry geom = make_geometry(params);
  const int iters = opt.max_iter > 0 ? opt.max_iter : 2000;
  int members = 0, indeterminate = 0;
  double worst_residual = 0.0;
  for (const RVec& p : set.points) {
    const StemVerdict v = stem_membership(p, geom, opt.tol, iters);
    if (v.status == StemVerdict::Status::kMember) ++members;
    if (v.status == StemVerdict::Status::kIndeterminate) ++indeterminate;
    worst_residual = std::max(worst_residual, v.residual);
  }
  rep.add("all_members",
          members == static_cast<int>(set.points.size()), worst_residual);
  rep.note("indeterminate", indeterminate);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return finish(rep, opt, wall, doc.dim);
}

// ---- sym ----

int cmd_sym_stretch(const Options& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport rep;
  rep.command = "sym stretch";
  const Document doc = load_document(opt.in);
  const MeasurementMatrix r = measurement_from_document(doc);
  const DimensionParams params = DimensionParams::make(doc.dim);
  const StretchedMatrix s = stretch(r, params);
  const StretchedReport v = verify_stretched(s, params, opt.tol);
  rep.add("orthogonality", v.orthogonality_defect < opt.tol,
          v.orthogonality_defect);
  rep.add("barycenter_fixed", v.barycenter_defect < opt.tol,
          v.barycenter_defect);
  rep.add("entry_bound", v.entry_bound_violation < opt.tol,
          v.entry_bound_violation);
  rep.add("row_sums", v.row_sum_defect < opt.tol, v.row_sum_defect);
  rep.add("col_sums", v.col_sum_defect < opt.tol, v.col_sum_defect);
  if (!opt.out.empty())
    save_document(
        stretched_document(s, doc.dim, make_meta(opt.seed, opt.tol)),
        opt.out);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return finish(rep, opt, wall, doc.dim);
}

int cmd_sym_from_unitary(const Options& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport rep;
  rep.command = "sym from-unitary";
  std::cout << "effective seed: " << opt.seed << "\n";
  const SicSystem sys = obtain_sic(opt);
  const DimensionParams params = DimensionParams::make(sys.dim);
  const UnitaryOperator u = haar_unitary(sys.dim, opt.seed + 0xab5e11);
  const StretchedMatrix s = stretched_from_unitary(u, sys, params);
  const StretchedReport v = verify_stretched(s, params, opt.tol);
  rep.add("stochastic_subgroup", v.pass,
          std::max({v.orthogonality_defect, v.barycenter_defect,
                    v.entry_bound_violation, v.row_sum_defect,
                    v.col_sum_defect}));
  if (!opt.out.empty())
    save_document(
        stretched_document(s, sys.dim, make_meta(opt.seed, opt.tol)),
        opt.out);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return finish(rep, opt, wall, sys.dim);
}

int cmd_sym_closure(const Options& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport rep;
  rep.command = "sym closure";
  std::cout << "effective seed: " << opt.seed << "\n";
  const SicSystem sys = obtain_sic(opt);
  const DimensionParams params = DimensionParams::make(sys.dim);
  const int count = opt.max_iter > 0 ? opt.max_iter : 20;
  Rng rng(opt.seed + 0xc105);
  std::vector<StretchedMatrix> sample;
  for (int i = 0; i < count; ++i)
    sample.push_back(
        stretched_from_unitary(haar_unitary(sys.dim, rng), sys, params));
  const ClosureReport r =
      group_closure_check(sample, params, 2 * count, opt.seed + 0xc106);
  rep.add("closed_under_products", r.pass, r.worst_defect);
  rep.note("products_checked", r.products_checked);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return finish(rep, opt, wall, sys.dim);
}

// ---- germ ----

int cmd_germ_grow(const Options& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport rep;
  rep.command = "germ grow";
  std::cout << "effective seed: " << opt.seed << "\n";
  const int candidates = opt.max_iter > 0 ? opt.max_iter : 10000;
  const GrowthState state =
      grow_sorted_qplex(opt.dim, candidates, opt.seed, opt.tol);
  const DimensionParams params = DimensionParams::make(opt.dim);
  const ConsistencyReport check = is_germ(state.accepted, params, 10 * opt.tol);
  rep.add("accepted_set_is_germ", check.pass);
  rep.note("accepted", state.accepted.points.size());
  rep.note("rejected", state.rejected);
  rep.note("regions_processed", state.regions_processed);
  if (!opt.out.empty())
    save_document(point_set_document(state.accepted, opt.dim,
                                     make_meta(opt.seed, opt.tol)),
                  opt.out);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return finish(rep, opt, wall, opt.dim);
}

int cmd_germ_lemma(const Options& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport rep;
  rep.command = "germ lemma";
  std::cout << "effective seed: " << opt.seed << "\n";
  const int trials = opt.max_iter > 0 ? opt.max_iter : 1000;
  Rng rng(opt.seed);
  double worst = -1.0;
  bool ok = true;
  for (int t = 0; t < trials; ++t) {
    const EigProfile prof = sample_constraint_variety(opt.dim, rng);
    const LemmaVerdict v = spectra_lemma_check(prof);
    worst = std::max(worst, v.product);
    ok = ok && v.nonpositive;
  }
  rep.add("pairing_nonpositive", ok, worst);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return finish(rep, opt, wall, opt.dim);
}

int cmd_params(const Options& opt, int n, double alpha) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport rep;
  rep.command = "params";
  GeneralParams p = n > 0 && alpha > 0.0
                        ? GeneralParams::make(n, alpha)
                        : GeneralParams::make(opt.dim * opt.dim,
                                              opt.dim + 1.0);
  rep.note("n", p.n);
  rep.note("alpha", p.alpha);
  rep.note("beta", p.beta);
  rep.note("lower", p.lower);
  rep.note("upper", p.upper);
  rep.note("m_max", p.m_max);
  rep.note("m_max_integral", p.m_max_integral);
  rep.note("quantum_u_2l", p.quantum_u_2l);
  rep.note("quantum_n", p.quantum_n);
  if (!opt.out.empty())
    save_document(params_document(p, make_meta(opt.seed, opt.tol)), opt.out);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  Options report_opt = opt;
  report_opt.out.clear();
  return finish(rep, report_opt, wall, opt.dim);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qplex: SIC representation and qplex geometry toolkit"};
  app.require_subcommand(1);
  Options opt;
  int params_n = 0;
  double params_alpha = 0.0;

  auto add_common = [&](CLI::App* cmd, bool needs_dim) {
    auto* dim_opt = cmd->add_option("--dim", opt.dim, "Hilbert dimension d");
    if (needs_dim) dim_opt->required();
    cmd->add_option("--seed", opt.seed, "random seed");
    cmd->add_option("--tol", opt.tol, "tolerance");
    cmd->add_option("--max-iter", opt.max_iter,
                    "iteration / restart / sample budget");
    cmd->add_option("--out", opt.out, "output document path");
    cmd->add_flag("--verify", opt.verify, "re-verify loaded documents");
    cmd->add_flag("--quiet", opt.quiet, "suppress the report on stdout");
  };

  auto* sic = app.add_subcommand("sic", "SIC construction and verification");
  auto* sic_find = sic->add_subcommand("find", "search for a fiducial");
  add_common(sic_find, true);
  auto* sic_verify = sic->add_subcommand("verify", "verify a saved system");
  add_common(sic_verify, false);
  sic_verify->add_option("--in", opt.in, "fiducial or sic_system document")
      ->required();
  auto* sic_quasi = sic->add_subcommand("quasi", "build a quasi-SIC");
  add_common(sic_quasi, true);

  auto* repc = app.add_subcommand("rep", "probability representation");
  auto* rep_to_prob =
      repc->add_subcommand("to-prob", "random state to probability vector");
  add_common(rep_to_prob, false);
  rep_to_prob->add_option("--sic", opt.aux, "fiducial or sic_system document");
  auto* rep_to_op =
      repc->add_subcommand("to-op", "validate a probability vector as a state");
  add_common(rep_to_op, false);
  rep_to_op->add_option("--in", opt.in, "prob_vector document")->required();
  rep_to_op->add_option("--sic", opt.aux, "fiducial or sic_system document");
  auto* rep_urg = repc->add_subcommand("urgleichung", "apply the urgleichung");
  add_common(rep_urg, false);
  rep_urg->add_option("--in", opt.in, "prob_vector document")->required();
  rep_urg->add_option("--meas", opt.aux, "measurement document")->required();
  auto* rep_evolve =
      repc->add_subcommand("evolve", "unitary evolution in probability space");
  add_common(rep_evolve, false);
  rep_evolve->add_option("--in", opt.in, "prob_vector document")->required();
  rep_evolve->add_option("--sic", opt.aux, "fiducial or sic_system document");

  auto* geom = app.add_subcommand("geom", "qplex convex geometry");
  auto* geom_germ = geom->add_subcommand("check-germ", "pairwise consistency");
  add_common(geom_germ, false);
  geom_germ->add_option("--in", opt.in, "point_set document")->required();
  auto* geom_polar = geom->add_subcommand("polar", "polar points of a set");
  add_common(geom_polar, false);
  geom_polar->add_option("--in", opt.in, "point_set document")->required();
  auto* geom_mmd = geom->add_subcommand("mmd", "maximal mutually distant sets");
  add_common(geom_mmd, false);
  geom_mmd->add_option("--in", opt.in, "point_set document")->required();
  auto* geom_stem = geom->add_subcommand("stem", "stem membership");
  add_common(geom_stem, false);
  geom_stem->add_option("--in", opt.in, "point_set document")->required();

  auto* sym = app.add_subcommand("sym", "stretched-matrix symmetries");
  auto* sym_stretch = sym->add_subcommand("stretch", "stretch a measurement");
  add_common(sym_stretch, false);
  sym_stretch->add_option("--in", opt.in, "measurement document")->required();
  auto* sym_fu =
      sym->add_subcommand("from-unitary", "transfer matrix of a Haar unitary");
  add_common(sym_fu, false);
  sym_fu->add_option("--sic", opt.aux, "fiducial or sic_system document");
  auto* sym_closure = sym->add_subcommand("closure", "group closure check");
  add_common(sym_closure, false);
  sym_closure->add_option("--sic", opt.aux,
                          "fiducial or sic_system document");

  auto* germ = app.add_subcommand("germ", "germ growth and spectra");
  auto* germ_grow = germ->add_subcommand("grow", "grow a sorted qplex germ");
  add_common(germ_grow, true);
  auto* germ_lemma = germ->add_subcommand("lemma", "eigenvalue pairing lemma");
  add_common(germ_lemma, true);

  auto* params = app.add_subcommand("params", "urgleichung parameter family");
  add_common(params, false);
  params->add_option("--n", params_n, "number of outcomes N");
  params->add_option("--alpha", params_alpha, "urgleichung alpha");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sic_find->parsed()) return cmd_sic_find(opt);
    if (sic_verify->parsed()) return cmd_sic_verify(opt);
    if (sic_quasi->parsed()) return cmd_sic_quasi(opt);
    if (rep_to_prob->parsed()) return cmd_rep_to_prob(opt);
    if (rep_to_op->parsed()) return cmd_rep_to_op(opt);
    if (rep_urg->parsed()) return cmd_rep_urgleichung(opt);
    if (rep_evolve->parsed()) return cmd_rep_evolve(opt);
    if (geom_germ->parsed()) return cmd_geom_check_germ(opt);
    if (geom_polar->parsed()) return cmd_geom_polar(opt);
    if (geom_mmd->parsed()) return cmd_geom_mmd(opt);
    if (geom_stem->parsed()) return cmd_geom_stem(opt);
    if (sym_stretch->parsed()) return cmd_sym_stretch(opt);
    if (sym_fu->parsed()) return cmd_sym_from_unitary(opt);
    if (sym_closure->parsed()) return cmd_sym_closure(opt);
    if (germ_grow->parsed()) return cmd_germ_grow(opt);
    if (germ_lemma->parsed()) return cmd_germ_lemma(opt);
    if (params->parsed()) return cmd_params(opt, params_n, params_alpha);
  } catch (const qplex::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "error: no subcommand\n";
  return 2;
}
