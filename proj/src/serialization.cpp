#include "gfc/serialization.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gfc/errors.hpp"

namespace gfc::io {

namespace {

double require_number(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number()) {
    throw ValidationError(std::string("missing or non-numeric field \"") +
                          field + "\"");
  }
  return j[field].get<double>();
}

double number_or(const json& j, const char* field, double fallback) {
  if (!j.contains(field)) return fallback;
  if (!j[field].is_number())
    throw ValidationError(std::string("field \"") + field +
                          "\" must be a number");
  return j[field].get<double>();
}

std::vector<double> number_array(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_array())
    throw ValidationError(std::string("missing or non-array field \"") +
                          field + "\"");
  std::vector<double> out;
  for (const auto& v : j[field]) {
    if (!v.is_number())
      throw ValidationError(std::string("field \"") + field +
                            "\" must contain only numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json series_to_json(const Gps& s) {
  Gps real = s.realified();
  json terms = json::array();
  for (const GpsTerm& t : real.terms()) {
    terms.push_back({t.coeff.real(), t.exponent});
  }
  return json{{"delta", real.delta().real()}, {"terms", std::move(terms)}};
}

Gps series_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("series must be a JSON object");
  double delta = number_or(j, "delta", 0.0);
  std::vector<GpsTerm> terms;
  if (j.contains("terms")) {
    if (!j["terms"].is_array())
      throw ValidationError("series field \"terms\" must be an array");
    for (const auto& entry : j["terms"]) {
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
          !entry[1].is_number()) {
        throw ValidationError(
            "series terms must be [coeff, exponent] number pairs");
      }
      terms.push_back({entry[1].get<double>(),
                       Complex(entry[0].get<double>(), 0.0)});
    }
  }
  return Gps(std::move(terms), delta);
}

SoninPair pair_from_json(const json& j) {
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string())
    throw ValidationError("kernel pair requires a string field \"family\"");
  const std::string family = j["family"].get<std::string>();
  const int n_terms = static_cast<int>(
      number_or(j, "n_terms", static_cast<double>(kDefaultKernelTerms)));
  if (family == "power_law") {
    return make_power_law_pair(require_number(j, "alpha"));
  }
  if (family == "prabhakar") {
    return make_prabhakar_pair(require_number(j, "alpha"),
                               require_number(j, "beta"),
                               require_number(j, "gamma"),
                               require_number(j, "lambda"), n_terms);
  }
  if (family == "bessel") {
    return make_bessel_pair(require_number(j, "alpha"), n_terms);
  }
  if (family == "custom") {
    SeriesKernelSpec spec;
    spec.alpha = require_number(j, "alpha");
    spec.beta = number_or(j, "beta", 1.0);
    spec.lambda = number_or(j, "lambda", 0.0);
    spec.a_coeffs = number_array(j, "a_coeffs");
    return make_pair_from_spec(spec, n_terms);
  }
  throw ValidationError("unknown kernel family \"" + family + "\"");
}

KernelTriple triple_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw ValidationError("triple requires a string field \"kind\"");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "hilfer_power") {
    return make_hilfer_triple(require_number(j, "alpha"),
                              require_number(j, "gamma"));
  }
  if (!j.contains("pair"))
    throw ValidationError("triple kind \"" + kind +
                          "\" requires a \"pair\" object");
  SoninPair pair = pair_from_json(j["pair"]);
  if (kind == "rl_type") return make_rl_triple(pair);
  if (kind == "caputo_type") return make_caputo_triple(pair);
  if (kind == "split") {
    const int n_terms = static_cast<int>(number_or(
        j, "n_terms", static_cast<double>(kDefaultKernelTerms)));
    return make_split_triple(pair, require_number(j, "gamma"), n_terms);
  }
  throw ValidationError("unknown triple kind \"" + kind + "\"");
}

IVProblem ProblemDocument::to_ivp() const {
  IVProblem ivp;
  ivp.triple = triple;
  ivp.forcing = forcing;
  if (b) {
    ivp.b = *b;
    ivp.c = c.value_or(std::vector<double>{});
  } else if (lambda) {
    ivp.b = {-*lambda, 1.0};
    ivp.c = {y0.value_or(0.0)};
  } else {
    ivp.b = {0.0, 1.0};
    ivp.c = {y0.value_or(0.0)};
  }
  ivp.validate();
  return ivp;
}

ProblemDocument problem_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("problem must be a JSON object");
  if (!j.contains("triple"))
    throw ValidationError("problem requires a \"triple\" object");
  ProblemDocument doc;
  doc.triple = triple_from_json(j["triple"]);
  if (j.contains("b")) doc.b = number_array(j, "b");
  if (j.contains("c")) doc.c = number_array(j, "c");
  if (j.contains("lambda")) doc.lambda = require_number(j, "lambda");
  if (j.contains("y0")) doc.y0 = require_number(j, "y0");
  doc.forcing = j.contains("forcing") ? series_from_json(j["forcing"])
                                      : Gps::zero();
  return doc;
}

namespace {

json pfd_to_json(const PartialFractionDecomposition& pfd,
                 const char* component) {
  json out = json::array();
  for (const PoleGroup& g : pfd.poles) {
    json residues = json::array();
    for (const auto& r : g.residues) residues.push_back({r.real(), r.imag()});
    out.push_back({{"component", component},
                   {"re", g.location.real()},
                   {"im", g.location.imag()},
                   {"multiplicity", g.multiplicity},
                   {"residues", std::move(residues)}});
  }
  return out;
}

}  // namespace

json solution_to_json(const SolutionExpression& sol) {
  json poles = json::array();
  if (sol.g_decomposition) {
    for (auto& p : pfd_to_json(*sol.g_decomposition, "G")) poles.push_back(p);
  }
  if (sol.u_decomposition) {
    for (auto& p : pfd_to_json(*sol.u_decomposition, "U")) poles.push_back(p);
  }
  json out{{"series", series_to_json(sol.series)},
           {"G", series_to_json(sol.G)},
           {"U", series_to_json(sol.U)},
           {"poles", std::move(poles)}};
  if (!sol.notes.empty()) out["notes"] = sol.notes;
  return out;
}

std::string sampled_to_csv(const SampledFunction& f) {
  std::ostringstream os;
  os << "t,y\n";
  for (int i = 0; i <= f.grid.n_steps; ++i) {
    double y = f.values[i];
    if (i == 0 && f.t0_singular) y = std::nan("");
    os << format_double(f.grid.node(i)) << ',' << format_double(y) << '\n';
  }
  return os.str();
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ValidationError("JSON parse error in " + path + ": " + e.what());
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write file: " + path);
  out << content;
}

}  // namespace gfc::io
