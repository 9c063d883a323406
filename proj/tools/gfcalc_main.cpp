#include <iostream>

#include <CLI11.hpp>

#include "gfc/cli_runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "gfcalc - general fractional calculus: Sonin kernels, first-level "
      "derivatives, operational solver and Volterra oracle"};
  app.require_subcommand(1);

  gfc::cli::RunConfig config;

  auto add_common = [&](CLI::App* sub, bool needs_problem) {
    auto* opt = sub->add_option("--problem", config.problem_file,
                                "JSON problem/kernel document");
    if (needs_problem) opt->required();
    sub->add_option("--t-end", config.t_end, "end of the time grid");
    sub->add_option("--n-steps", config.n_steps, "number of grid steps");
    sub->add_option("--order", config.order, "convolution-series order");
    sub->add_option("--out", config.output, "output path (or base name)");
    sub->add_option("--format", config.format, "csv or json (default: both)")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  auto* verify = app.add_subcommand(
      "kernel-verify",
      "print Sonin/triple residuals for the builtin catalog or a kernel file");
  add_common(verify, false);

  auto* ml = app.add_subcommand("ml-eval", "evaluate a Mittag-Leffler function");
  ml->add_option("--alpha", config.ml_alpha, "first index (multiplies n)")
      ->required();
  ml->add_option("--beta", config.ml_beta, "second index")->required();
  ml->add_option("--gamma", config.ml_gamma,
                 "Prabhakar exponent (default 1: two-parameter function)");
  ml->add_option("--z", config.ml_z, "argument")->required();

  add_common(app.add_subcommand("solve-basic",
                                "solve D y = f with (I_{k2} y)(0) = y0"),
             true);
  add_common(app.add_subcommand("solve-relax",
                                "solve D y - lambda y = f"),
             true);
  add_common(app.add_subcommand("solve-multiterm",
                                "solve sum b_n D^<n> y = f"),
             true);
  add_common(app.add_subcommand(
                 "oracle-compare",
                 "compare the closed-form solution with the Volterra oracle"),
             true);

  CLI11_PARSE(app, argc, argv);

  config.command = app.get_subcommands().front()->get_name();
  return gfc::cli::run(config, std::cout, std::cerr);
}
