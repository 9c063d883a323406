#ifndef GFC_SERIALIZATION_HPP
#define GFC_SERIALIZATION_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "gfc/gps.hpp"
#include "gfc/kernel_catalog.hpp"
#include "gfc/solver.hpp"
#include "gfc/volterra.hpp"

namespace gfc::io {

using nlohmann::json;

// Series schema: {"delta": number, "terms": [[coeff, exponent], ...]}.
json series_to_json(const Gps& s);
Gps series_from_json(const json& j);

// Kernel pair schema:
//   {"family": "power_law" | "prabhakar" | "bessel" | "custom",
//    "alpha": ..., "beta": ..., "lambda": ..., "gamma": ...,
//    "a_coeffs": [...], "n_terms": ...}
// with fields beyond "family"/"alpha" required only where the family
// needs them.
SoninPair pair_from_json(const json& j);

// Triple schema: {"kind": "hilfer_power" | "rl_type" | "caputo_type" |
// "split", "alpha": ..., "gamma": ..., "pair": <kernel pair object>}.
KernelTriple triple_from_json(const json& j);

// Problem document: {"triple": {...}, "b": [...], "c": [...],
// "lambda": ..., "y0": ..., "forcing": <series object>}.  Either the
// multi-term form (b, c) or the relaxation form (lambda, y0) or the basic
// form (y0 only) must be present; all normalize to an IVProblem.
struct ProblemDocument {
  KernelTriple triple;
  std::optional<std::vector<double>> b;
  std::optional<std::vector<double>> c;
  std::optional<double> lambda;
  std::optional<double> y0;
  Gps forcing;

  IVProblem to_ivp() const;
};

ProblemDocument problem_from_json(const json& j);

// Solution export: the solution series plus a pole/residue table.
json solution_to_json(const SolutionExpression& sol);

// CSV with header "t,y", one row per node, 17 significant digits.  A
// singular t = 0 node is written as nan.
std::string sampled_to_csv(const SampledFunction& f);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

std::string format_double(double x);  // %.17g

}  // namespace gfc::io

#endif  // GFC_SERIALIZATION_HPP
