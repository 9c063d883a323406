#ifndef GFC_CLI_RUNNER_HPP
#define GFC_CLI_RUNNER_HPP

#include <iosfwd>
#include <string>

namespace gfc::cli {

// One CLI invocation.  Exit status 0 = success, 1 = input/validation
// error, 2 = numerical failure.
struct RunConfig {
  std::string command;  // kernel-verify | ml-eval | solve-basic |
                        // solve-relax | solve-multiterm | oracle-compare
  std::string problem_file;
  double t_end = 1.0;
  int n_steps = 1024;
  int order = 64;
  std::string output;
  std::string format;  // "", "csv" or "json"

  // ml-eval parameters
  double ml_alpha = 1.0;
  double ml_beta = 1.0;
  double ml_gamma = 1.0;
  double ml_z = 0.0;
};

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace gfc::cli

#endif  // GFC_CLI_RUNNER_HPP
