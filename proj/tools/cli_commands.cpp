#include "cli_commands.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include "json.hpp"
#include "monosys/errors.hpp"
#include "monosys/format.hpp"
#include "monosys/spectrum.hpp"

namespace monosys::cli {

using nlohmann::json;

namespace {

json to_json(const Vector& v) { return json(v); }

json interval_json(const LambdaInterval& interval) {
  json j;
  j["lower"] = interval.lower();
  j["upper"] = std::isinf(interval.upper()) ? json(nullptr) : json(interval.upper());
  return j;
}

json nontriviality_json(const NontrivialityResult& r) {
  if (r.pass) return json("not-falsified");
  json j;
  j["counterexample"] = to_json(r.counterexample->coordinates());
  j["h_norm"] = r.h_norm_at_counterexample;
  return j;
}

json solve_report_json(const SolveReport& report) {
  json j;
  j["solution"] = to_json(report.solution);
  j["residual"] = report.residual;
  j["iterations"] = report.iterations;
  j["step"] = report.step;
  j["contraction"] = report.contraction;
  j["slow_contraction"] = report.slow_contraction;
  return j;
}

/// Writes the primary stream to --out when present, else to stdout.
void emit_primary(const RunOptions& options, std::ostream& out, const std::string& payload) {
  if (options.out) {
    std::ofstream file(*options.out, std::ios::binary);
    if (!file) throw ConfigError("cannot open output file: " + *options.out);
    file << payload;
    return;
  }
  out << payload;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int run_solve_like(const RunConfig& config, const RunOptions& options, std::ostream& out,
                   std::ostream& err, bool bvp_mode) {
  ProblemInstance problem = [&] {
    if (!bvp_mode) return build_problem(config);
    // A BVP run repackages the family as the induced nonlinearity of the
    // difference problem; the matrix must be the Dirichlet one.
    if (!config.matrix || !config.matrix->is_tridiagonal()) {
      throw ConfigError("config field 'matrix': bvp requires {\"type\": \"dirichlet\"}");
    }
    return build_problem(config);
  }();

  if (bvp_mode) {
    const SymmetricMatrix reference = build_dirichlet_matrix(problem.dim());
    for (std::size_t i = 0; i < problem.dim(); ++i) {
      if (problem.matrix().entry(i, i) != reference.entry(i, i) ||
          (i + 1 < problem.dim() &&
           problem.matrix().entry(i, i + 1) != reference.entry(i, i + 1))) {
        throw ConfigError("config field 'matrix': bvp requires the dirichlet matrix");
      }
    }
  }

  if (!config.parameter) throw ConfigError("config field 'parameter': missing");
  const ParameterPoint& u = *config.parameter;

  // Admissibility first, so boundary lambdas fail before any work.
  const LambdaInterval interval = admissible_lambda_interval(problem);
  if (!interval.contains(problem.lambda())) {
    err << "inadmissible lambda " << format_g17(problem.lambda()) << ": interval ("
        << format_g17(interval.lower()) << ", "
        << (std::isinf(interval.upper()) ? "inf" : format_g17(interval.upper()))
        << "), endpoints excluded\n";
    return kExitInadmissible;
  }

  const NontrivialityResult nontrivial =
      check_nontriviality(problem.nonlinearity(), problem.space(), options.seed);

  SolveReport report;
  try {
    report = solve_problem(problem, u, config.solver);
  } catch (const std::runtime_error& e) {
    err << e.what() << "\n";
    return kExitSolveFailure;
  }

  json j = solve_report_json(report);
  j["admissible_interval"] = interval_json(interval);
  j["nontriviality"] = nontriviality_json(nontrivial);
  j["config_digest"] = config.digest;
  j["seed"] = options.seed;
  if (const auto bound = apriori_solution_bound(problem)) j["apriori_bound"] = *bound;

  if (!bvp_mode) {
    emit_primary(options, out, dump(j));
    return kExitOk;
  }

  const GridFunction grid = GridFunction::from_interior(report.solution);
  double defect = 0.0;
  {
    const Vector d2 = second_difference(grid);
    const Vector hx = problem.nonlinearity().evaluate(report.solution, u);
    for (std::size_t k = 0; k < problem.dim(); ++k) {
      // induced h = -f, so the difference form reads delta^2 x + lambda h = 0
      defect = std::max(defect, std::abs(d2[k] + problem.lambda() * hx[k]));
    }
  }
  j["difference_residual"] = defect;
  j["grid"] = json::array();
  for (std::size_t k = 0; k < grid.node_count(); ++k) {
    j["grid"].push_back(json::array({k, grid.value(k)}));
  }

  const std::string csv = to_csv(grid);
  if (options.out) {
    emit_primary(options, out, csv);  // grid CSV to the file
    out << dump(j);                   // report JSON to stdout
  } else if (options.format == "json") {
    out << dump(j);
  } else {
    out << csv;
  }
  return kExitOk;
}

}  // namespace

int cmd_spectrum(const RunConfig& config, const RunOptions& options, std::ostream& out,
                 std::ostream& /*err*/) {
  if (!config.matrix) throw ConfigError("config field 'matrix': missing");
  const Spectrum spectrum = compute_spectrum(*config.matrix);

  std::string payload;
  for (std::size_t k = 0; k < spectrum.eigenvalues.size(); ++k) {
    payload += std::to_string(k + 1);
    payload += ',';
    payload += format_g17(spectrum.eigenvalues[k]);
    payload += '\n';
  }
  if (options.format == "json") {
    json j;
    j["spectral_norm"] = std::max(std::abs(spectrum.eigenvalues.front()),
                                  std::abs(spectrum.eigenvalues.back()));
    j["smallest_eigenvalue"] = spectrum.eigenvalues.front();
    j["config_digest"] = config.digest;
    j["seed"] = options.seed;
    payload += dump(j);
  }
  emit_primary(options, out, payload);
  return kExitOk;
}

int cmd_solve(const RunConfig& config, const RunOptions& options, std::ostream& out,
              std::ostream& err) {
  return run_solve_like(config, options, out, err, /*bvp_mode=*/false);
}

int cmd_bvp(const RunConfig& config, const RunOptions& options, std::ostream& out,
            std::ostream& err) {
  return run_solve_like(config, options, out, err, /*bvp_mode=*/true);
}

int cmd_study(const RunConfig& config, const RunOptions& options, std::ostream& out,
              std::ostream& err) {
  ProblemInstance problem = build_problem(config);

  const LambdaInterval interval = admissible_lambda_interval(problem);
  if (!interval.contains(problem.lambda())) {
    err << "inadmissible lambda " << format_g17(problem.lambda()) << ": interval ("
        << format_g17(interval.lower()) << ", "
        << (std::isinf(interval.upper()) ? "inf" : format_g17(interval.upper()))
        << "), endpoints excluded\n";
    return kExitInadmissible;
  }

  const ParameterSequence sequence = build_sequence(config, problem.space());

  DependenceReport report;
  try {
    report = run_dependence_study(problem, sequence, config.solver);
  } catch (const StudyMemberError& e) {
    err << e.what() << "\n";
    return kExitSolveFailure;
  } catch (const std::runtime_error& e) {
    err << e.what() << "\n";
    return kExitSolveFailure;
  }

  json j;
  j["limit_solution"] = to_json(report.limit_solution);
  j["limit_residual"] = report.limit_residual;
  j["verdict"] = report.within_bound ? "within-bound" : "bound-violated";
  j["records"] = json::array();
  for (const DependenceRecord& rec : report.records) {
    json r;
    r["k"] = rec.index;
    r["param_dist"] = rec.parameter_distance;
    r["solution_dist"] = rec.solution_distance;
    r["stability_bound"] = rec.stability_bound;
    r["nontrivial"] = rec.nontrivial_at_parameter;
    j["records"].push_back(std::move(r));
  }
  j["config_digest"] = config.digest;
  j["seed"] = options.seed;

  const std::string csv = to_csv(report);
  if (options.out) {
    emit_primary(options, out, csv);
    out << dump(j);
  } else if (options.format == "json") {
    out << dump(j);
  } else {
    out << csv;
  }
  return report.within_bound ? kExitOk : kExitBoundViolated;
}

int cmd_check(const RunConfig& config, const RunOptions& options, std::ostream& out,
              std::ostream& /*err*/) {
  if (!config.check) throw ConfigError("config field 'check': missing");
  const CheckSpec& spec = *config.check;
  CertifiedNonlinearity family = build_family(config);
  const ParameterSpace& space = *config.box;

  FalsifierOptions fopts{spec.samples, options.seed};

  const auto pick_radius = [&](double fallback) {
    return spec.radius.value_or(fallback);
  };

  json reports = json::array();
  bool any_falsified = false;
  for (Assumption a : spec.assumptions) {
    FalsificationReport r;
    switch (a) {
      case Assumption::A2: {
        const double claimed = spec.a ? *spec.a : family.constants.require_a();
        r = falsify_A2(family.h, space, claimed, pick_radius(5.0), fopts);
        break;
      }
      case Assumption::A4: {
        const double claimed = spec.b ? *spec.b : family.constants.require_b();
        r = falsify_A4(family.h, space, claimed, pick_radius(5.0), fopts);
        break;
      }
      case Assumption::A1:
      case Assumption::A3: {
        std::optional<GrowthCertificate> certificate = spec.growth;
        if (!certificate) certificate = family.growth;
        if (!certificate) {
          throw ConfigError("config field 'check.growth': required (family has no certificate)");
        }
        const double fallback = std::max(5.0, 2.0 * certificate->radius);
        r = a == Assumption::A1
                ? falsify_A1(family.h, space, *certificate, pick_radius(fallback), fopts)
                : falsify_A3(family.h, space, *certificate, pick_radius(fallback), fopts);
        break;
      }
    }

    json entry;
    entry["assumption"] = to_string(r.assumption);
    entry["verdict"] = r.falsified() ? "counterexample" : "not-falsified";
    entry["samples_used"] = r.samples_used;
    entry["seed"] = r.seed;
    if (r.falsified()) {
      any_falsified = true;
      json w;
      if (const auto* pw = std::get_if<PairWitness>(&*r.counterexample)) {
        w["component"] = pw->component;
        w["z1"] = pw->z1;
        w["z2"] = pw->z2;
        w["v"] = to_json(pw->v.coordinates());
        w["lhs"] = pw->lhs;
        w["rhs"] = pw->rhs;
      } else {
        const auto& gw = std::get<GrowthWitness>(*r.counterexample);
        w["z"] = to_json(gw.z);
        w["v"] = to_json(gw.v.coordinates());
        w["lhs"] = gw.lhs;
        w["rhs"] = gw.rhs;
      }
      entry["witness"] = std::move(w);
    }
    reports.push_back(std::move(entry));
  }

  json j;
  j["reports"] = std::move(reports);
  j["config_digest"] = config.digest;
  j["seed"] = options.seed;
  emit_primary(options, out, dump(j));
  return any_falsified ? kExitFalsified : kExitOk;
}

}  // namespace monosys::cli
