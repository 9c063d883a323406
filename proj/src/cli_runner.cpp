#include "gfc/cli_runner.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <vector>

#include "gfc/conv_series.hpp"
#include "gfc/errors.hpp"
#include "gfc/kernel_catalog.hpp"
#include "gfc/serialization.hpp"
#include "gfc/solver.hpp"
#include "gfc/special_functions.hpp"
#include "gfc/volterra.hpp"

namespace gfc::cli {

namespace {

using io::format_double;
using io::json;

std::string residual_line(const std::string& what, const std::string& tag,
                          const ResidualReport& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%-6s %-55s constant_err=%.3e  max_other=%.3e  %s", what.c_str(),
                tag.c_str(), r.constant_error, r.max_other,
                r.max() <= kResidualTol ? "PASS" : "FAIL");
  return buf;
}

int cmd_kernel_verify(const RunConfig& config, std::ostream& out) {
  bool all_pass = true;
  auto report_pair = [&](const SoninPair& pair) {
    ResidualReport r = sonin_residual(pair.kappa, pair.k);
    all_pass = all_pass && r.max() <= kResidualTol;
    out << residual_line("pair", pair.family_tag, r) << "\n";
  };
  auto report_triple = [&](const KernelTriple& triple) {
    ResidualReport r = triple_residual(triple);
    all_pass = all_pass && r.max() <= kResidualTol;
    out << residual_line("triple", triple.family_tag, r) << "\n";
  };

  if (!config.problem_file.empty()) {
    json j = io::read_json_file(config.problem_file);
    if (j.contains("kind")) {
      report_triple(io::triple_from_json(j));
    } else {
      report_pair(io::pair_from_json(j));
    }
  } else {
    for (double alpha : {0.1, 0.5, 0.9}) report_pair(make_power_law_pair(alpha));
    report_triple(make_hilfer_triple(0.5, 0.25));
    for (double lambda : {1.0, -1.0})
      report_pair(make_prabhakar_pair(0.6, 1.0, 0.5, lambda));
    report_pair(make_bessel_pair(0.5));
  }
  return all_pass ? 0 : 1;
}

int cmd_ml_eval(const RunConfig& config, std::ostream& out) {
  double value;
  if (config.ml_gamma == 1.0) {
    value = mittag_leffler(config.ml_alpha, config.ml_beta, config.ml_z);
  } else {
    value = prabhakar(config.ml_alpha, config.ml_beta, config.ml_gamma,
                      config.ml_z);
  }
  out << format_double(value) << "\n";
  return 0;
}

// Node values of a closed-form solution, with the t = 0 node treated like
// sample(): finite limit when the leading exponent is >= 1, otherwise a
// singular flag.
SampledFunction sample_solution(const SolutionExpression& sol,
                                const UniformGrid& grid) {
  SampledFunction s;
  s.grid = grid;
  s.values.resize(grid.n_steps + 1);
  const double lead = sol.series.leading_exponent();
  if (lead < 1.0 - Gps::kExponentTol) {
    s.t0_singular = true;
    s.singular_exponent = lead;
    s.values[0] = 0.0;
  } else {
    s.values[0] = sol.series.h1_coeff().real();
  }
  for (int i = 1; i <= grid.n_steps; ++i) s.values[i] = sol.eval(grid.node(i));
  return s;
}

SolutionExpression solve_from_document(const io::ProblemDocument& doc,
                                       int order) {
  if (doc.b) return solve_multiterm(doc.to_ivp(), order);
  if (doc.lambda) {
    return solve_relaxation(doc.triple, *doc.lambda, doc.y0.value_or(0.0),
                            doc.forcing, order);
  }
  return solve_basic(doc.triple, doc.y0.value_or(0.0), doc.forcing);
}

int cmd_solve(const RunConfig& config, std::ostream& out) {
  if (config.problem_file.empty())
    throw ValidationError("--problem is required for solve commands");
  io::ProblemDocument doc =
      io::problem_from_json(io::read_json_file(config.problem_file));
  if (config.command == "solve-relax" && !doc.lambda)
    throw ValidationError("solve-relax requires \"lambda\" in the problem file");
  if (config.command == "solve-multiterm" && !doc.b)
    throw ValidationError(
        "solve-multiterm requires \"b\" coefficients in the problem file");
  if (config.command == "solve-basic" && doc.b)
    throw ValidationError(
        "solve-basic expects a basic problem (y0/forcing), not b coefficients");

  SolutionExpression sol = solve_from_document(doc, config.order);
  UniformGrid grid(config.t_end, config.n_steps);
  SampledFunction sampled = sample_solution(sol, grid);

  const std::string base = config.output.empty() ? "solution" : config.output;
  if (config.format.empty() || config.format == "json") {
    const std::string path =
        config.format == "json" ? base : base + ".json";
    io::write_text_file(path, io::solution_to_json(sol).dump(2) + "\n");
    out << "wrote " << path << "\n";
  }
  if (config.format.empty() || config.format == "csv") {
    const std::string path = config.format == "csv" ? base : base + ".csv";
    io::write_text_file(path, io::sampled_to_csv(sampled));
    out << "wrote " << path << "\n";
  }
  return 0;
}

int cmd_oracle_compare(const RunConfig& config, std::ostream& out) {
  if (config.problem_file.empty())
    throw ValidationError("--problem is required for oracle-compare");
  io::ProblemDocument doc =
      io::problem_from_json(io::read_json_file(config.problem_file));
  IVProblem ivp = doc.to_ivp();
  SolutionExpression sol = solve_from_document(doc, config.order);

  UniformGrid grid(config.t_end, config.n_steps);
  SampledFunction closed = sample_solution(sol, grid);
  SampledFunction stepped = solve_volterra_ivp(ivp, grid);

  std::ostringstream csv;
  csv << "t,y_closed,y_volterra,abs_err,rel_err\n";
  double max_rel = 0.0;
  for (int i = 0; i <= grid.n_steps; ++i) {
    double yc = closed.values[i];
    double yv = stepped.values[i];
    if (i == 0 && (closed.t0_singular || stepped.t0_singular)) {
      yc = std::nan("");
      yv = std::nan("");
    }
    const double abs_err = std::fabs(yc - yv);
    const double rel_err = abs_err / std::max(std::fabs(yc), 1e-300);
    csv << format_double(grid.node(i)) << ',' << format_double(yc) << ','
        << format_double(yv) << ',' << format_double(abs_err) << ','
        << format_double(rel_err) << '\n';
    if (grid.node(i) >= 0.1 * config.t_end && std::isfinite(rel_err)) {
      max_rel = std::max(max_rel, rel_err);
    }
  }
  const std::string path =
      config.output.empty() ? "oracle_compare.csv" : config.output;
  io::write_text_file(path, csv.str());
  out << "wrote " << path << "\n";
  out << "max_rel_err(t >= " << format_double(0.1 * config.t_end)
      << ") = " << format_double(max_rel) << "\n";
  return 0;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == "kernel-verify") return cmd_kernel_verify(config, out);
    if (config.command == "ml-eval") return cmd_ml_eval(config, out);
    if (config.command == "solve-basic" || config.command == "solve-relax" ||
        config.command == "solve-multiterm") {
      return cmd_solve(config, out);
    }
    if (config.command == "oracle-compare")
      return cmd_oracle_compare(config, out);
    err << "error: unknown command \"" << config.command << "\"\n";
    return 1;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace gfc::cli
