// qosc: batch evaluation, construction and verification for the
// two-parameter deformed multimode oscillator toolkit. Emits deterministic
// JSON or text reports; exit code 0 on overall pass, 1 on verification
// failure, 2 on usage errors, 3 on domain errors.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pqosc/coherent.hpp"
#include "pqosc/lattice.hpp"
#include "pqosc/qsym.hpp"
#include "pqosc/relations.hpp"

using json = nlohmann::ordered_json;
using namespace pqosc;

namespace {

constexpr const char* kVersion = "0.1.0";

struct RawConfig {
  std::string command;
  std::optional<std::string> p, theta, theta_pi_over, modes, cutoff, suite, tolerance;
  std::optional<std::string> lambda, window, r, word, fn, a, x, n, base, nmax, alphabet;
  bool exact = false;
  bool resolve_flag = false;
  std::optional<std::string> out;
  std::string format = "json";
  bool format_from_flag = false;
};

const std::map<std::string, std::optional<std::string> RawConfig::*> kConfigKeys = {
    {"p", &RawConfig::p},           {"theta", &RawConfig::theta},
    {"theta-pi-over", &RawConfig::theta_pi_over}, {"modes", &RawConfig::modes},
    {"cutoff", &RawConfig::cutoff}, {"suite", &RawConfig::suite},
    {"tolerance", &RawConfig::tolerance}, {"lambda", &RawConfig::lambda},
    {"window", &RawConfig::window}, {"r", &RawConfig::r},
    {"word", &RawConfig::word},     {"fn", &RawConfig::fn},
    {"a", &RawConfig::a},           {"x", &RawConfig::x},
    {"n", &RawConfig::n},           {"base", &RawConfig::base},
    {"nmax", &RawConfig::nmax},     {"alphabet", &RawConfig::alphabet},
    {"out", &RawConfig::out},
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) out.push_back(item);
  if (out.empty()) throw UsageError("empty list value");
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const std::string& item : split_list(text)) out.push_back(std::stoi(item));
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  for (const std::string& item : split_list(text)) out.push_back(std::stod(item));
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  for (const std::string& item : split_list(text)) out.push_back(parse_rational(item));
  return out;
}

// Flat key = value configuration file; '#' starts a comment; flags given on
// the command line keep priority. Unknown keys are rejected.
void apply_config_file(const std::string& path, RawConfig& raw) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto strip = [](std::string s) {
      const char* ws = " \t\r\n";
      auto b = s.find_first_not_of(ws);
      if (b == std::string::npos) return std::string{};
      auto e = s.find_last_not_of(ws);
      return s.substr(b, e - b + 1);
    };
    std::string stripped = strip(line);
    if (stripped.empty()) continue;
    auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw UsageError("config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = strip(stripped.substr(0, eq));
    std::string value = strip(stripped.substr(eq + 1));
    if (key == "exact") {
      if (value == "true" || value == "1") raw.exact = true;
      else if (value == "false" || value == "0") { /* command line may still set it */ }
      else throw UsageError("config key 'exact' expects true/false");
      continue;
    }
    if (key == "format") {
      if (!raw.format_from_flag) raw.format = value;
      continue;
    }
    auto it = kConfigKeys.find(key);
    if (it == kConfigKeys.end())
      throw UsageError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    auto& slot = raw.*(it->second);
    if (!slot) slot = value;  // flags override file values
  }
}

DeformationParams resolve_params(const RawConfig& raw, double default_tolerance = 1e-12) {
  if (!raw.p) throw UsageError("--p is required");
  double theta = 0.0;
  if (raw.theta && raw.theta_pi_over)
    throw UsageError("--theta and --theta-pi-over are mutually exclusive");
  if (raw.theta) theta = std::stod(*raw.theta);
  if (raw.theta_pi_over) theta = M_PI / std::stod(*raw.theta_pi_over);
  double tolerance = raw.tolerance ? std::stod(*raw.tolerance) : default_tolerance;
  Rational p = parse_rational(*raw.p);
  if (p == 1) {
    if (theta != 0.0) throw UsageError("p = 1 is the classical limit and requires theta = 0");
    return DeformationParams::classical(tolerance);
  }
  return DeformationParams::exact(p, theta, tolerance);
}

ModeConfig resolve_mode_config(const RawConfig& raw, const DeformationParams& params) {
  int modes = raw.modes ? std::stoi(*raw.modes) : 1;
  std::vector<int> cutoff;
  if (raw.cutoff) {
    cutoff = parse_int_list(*raw.cutoff);
    if (static_cast<int>(cutoff.size()) == 1)
      cutoff.assign(static_cast<std::size_t>(modes), cutoff.front());
  } else {
    cutoff.assign(static_cast<std::size_t>(modes), 5);
  }
  ModeConfig config{modes, std::move(cutoff), params, {}};
  config.validate();
  return config;
}

std::string iso_timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
  return buf;
}

json config_json(const RawConfig& raw) {
  json c;
  c["command"] = raw.command;
  auto put = [&](const char* name, const std::optional<std::string>& v) {
    if (v) c[name] = *v;
  };
  put("p", raw.p);
  put("theta", raw.theta);
  put("theta-pi-over", raw.theta_pi_over);
  put("modes", raw.modes);
  put("cutoff", raw.cutoff);
  put("suite", raw.suite);
  put("tolerance", raw.tolerance);
  put("lambda", raw.lambda);
  put("window", raw.window);
  put("r", raw.r);
  put("word", raw.word);
  put("fn", raw.fn);
  put("a", raw.a);
  put("x", raw.x);
  put("n", raw.n);
  put("base", raw.base);
  put("nmax", raw.nmax);
  put("alphabet", raw.alphabet);
  c["exact"] = raw.exact;
  c["format"] = raw.format;
  return c;
}

json result_entry(const VerificationReport& r) {
  json e;
  e["label"] = r.label;
  e["paperRef"] = r.ref;
  e["maxResidual"] = r.max_residual;
  e["pass"] = r.pass;
  e["domainSize"] = r.domain_size;
  if (r.exact_mode) e["exactZero"] = r.exact_zero;
  if (r.skipped) e["skipped"] = true;
  if (!r.note.empty()) e["note"] = r.note;
  return e;
}

json value_entry(const std::string& label, const std::string& ref, double value) {
  json e;
  e["label"] = label;
  e["paperRef"] = ref;
  e["value"] = value;
  e["pass"] = true;
  return e;
}

json check_entry(const std::string& label, const std::string& ref, double residual, bool pass) {
  json e;
  e["label"] = label;
  e["paperRef"] = ref;
  e["maxResidual"] = residual;
  e["pass"] = pass;
  return e;
}

void sort_results(json& results) {
  std::sort(results.begin(), results.end(), [](const json& a, const json& b) {
    return a.at("label").get<std::string>() < b.at("label").get<std::string>();
  });
}

// ---------------------------------------------------------------------------
// command implementations, each filling the results array

json run_eval(const RawConfig& raw) {
  if (!raw.fn) throw UsageError("eval requires --fn");
  const std::string fn = *raw.fn;
  json results = json::array();
  auto need = [&](const std::optional<std::string>& v, const char* flag) -> double {
    if (!v) throw UsageError(std::string("eval --fn ") + fn + " requires " + flag);
    return std::stod(*v);
  };
  if (fn == "bracket") {
    double x = need(raw.x, "--x");
    double base = raw.base ? std::stod(*raw.base) : need(raw.p, "--p");
    std::ostringstream label;
    label << "bracket(x=" << x << ",base=" << base << ")";
    results.push_back(value_entry(label.str(), "relations.md#special-functions",
                                  q_bracket(x, base)));
  } else if (fn == "factorial") {
    long n = static_cast<long>(need(raw.n, "--n"));
    double base = raw.base ? std::stod(*raw.base) : need(raw.p, "--p");
    std::ostringstream label;
    label << "factorial(n=" << n << ",base=" << base << ")";
    results.push_back(value_entry(label.str(), "relations.md#special-functions",
                                  q_bracket_factorial(n, base)));
  } else if (fn == "pochhammer") {
    double a = need(raw.a, "--a");
    double p = need(raw.p, "--p");
    long n = static_cast<long>(need(raw.n, "--n"));
    std::ostringstream label;
    label << "pochhammer(a=" << a << ",p=" << p << ",n=" << n << ")";
    results.push_back(value_entry(label.str(), "relations.md#special-functions",
                                  q_pochhammer(a, p, n)));
  } else if (fn == "ep") {
    double x = need(raw.x, "--x");
    double p = need(raw.p, "--p");
    auto r = deformed_exp(x, p);
    std::ostringstream label;
    label << "ep(x=" << x << ",p=" << p << ")";
    json e = value_entry(label.str(), "relations.md#special-functions", r.value.real());
    e["tailBound"] = r.tail_bound;
    e["terms"] = r.terms;
    results.push_back(e);
  } else if (fn == "psi01") {
    double a = need(raw.a, "--a");
    double p = need(raw.p, "--p");
    double x = need(raw.x, "--x");
    Psi01Result info;
    double v = bilateral_psi01(a, p, x, 1e-15, &info);
    std::ostringstream label;
    label << "psi01(a=" << a << ",p=" << p << ",x=" << x << ")";
    json e = value_entry(label.str(), "relations.md#special-functions", v);
    e["windowLo"] = info.window_lo;
    e["windowHi"] = info.window_hi;
    e["boundaryTerm"] = info.boundary_term;
    results.push_back(e);
  } else if (fn == "step") {
    long i = static_cast<long>(need(raw.a, "--a"));
    long j = static_cast<long>(need(raw.x, "--x"));
    std::ostringstream label;
    label << "step(i=" << i << ",j=" << j << ")";
    results.push_back(value_entry(label.str(), "relations.md#special-functions",
                                  step_indicator(i, j)));
  } else {
    throw UsageError("unknown --fn '" + fn + "' (bracket|factorial|pochhammer|ep|psi01|step)");
  }
  return results;
}

json run_verify(const RawConfig& raw) {
  DeformationParams params = resolve_params(raw);
  ModeConfig config = resolve_mode_config(raw, params);
  double tolerance = raw.tolerance ? std::stod(*raw.tolerance) : 1e-10;

  std::vector<std::string> suites;
  std::string requested = raw.suite.value_or("all");
  if (requested == "all") {
    suites = all_suite_names();
    // the classical suite needs classical parameters; skip it on deformed runs
    if (!params.classical_limit) std::erase(suites, "classical");
    if (params.classical_limit) {
      std::erase(suites, "subhamiltonian");
    }
  } else {
    suites.push_back(requested);
  }

  json results = json::array();
  for (const std::string& name : suites) {
    auto id = parse_suite(name);
    if (!id) throw UsageError("unknown suite '" + name + "'");
    for (const VerificationReport& r : run_suite(*id, config, raw.exact, tolerance))
      results.push_back(result_entry(r));
  }
  return results;
}

json run_coherent(const RawConfig& raw) {
  DeformationParams params = resolve_params(raw);
  ModeConfig config = resolve_mode_config(raw, params);
  if (!raw.r) throw UsageError("coherent requires --r (one |z_i|^2 per mode)");
  std::vector<double> r = parse_double_list(*raw.r);
  int total_cutoff = 0;
  for (int c : config.cutoff) total_cutoff = std::max(total_cutoff, c);
  double tolerance = raw.tolerance ? std::stod(*raw.tolerance) : 1e-10;

  auto series = build_coherent_state(config, r, CoherentMethod::series, total_cutoff);
  auto expanded = build_coherent_state(config, r, CoherentMethod::exponential, total_cutoff);

  json results = json::array();
  bool same = series.amplitudes.size() == expanded.amplitudes.size();
  if (same)
    for (const auto& [occ, poly] : series.amplitudes) {
      auto it = expanded.amplitudes.find(occ);
      if (it == expanded.amplitudes.end() || !(poly == it->second)) {
        same = false;
        break;
      }
    }
  results.push_back(check_entry("coherent.series-vs-exponential", "relations.md#coherent",
                                same ? 0.0 : 1.0, same));

  for (int mode = 1; mode <= config.n_modes; ++mode) {
    CoherentEigenReport rep = check_lowering_eigenproblem(series, mode);
    json e = check_entry("coherent.eigenproblem[" + std::to_string(mode) + "]",
                         "relations.md#coherent", rep.max_mismatch, rep.exact_match);
    e["compared"] = rep.compared;
    e["boundaryResidue"] = rep.boundary_residue;
    results.push_back(e);
  }

  // The pass threshold allows the certified truncation tail on top of the
  // requested tolerance.
  double norm_residual = coherent_norm_residual(series);
  double allowance = coherent_truncation_allowance(series);
  json e = check_entry("coherent.normalization", "relations.md#coherent", norm_residual,
                       norm_residual <= tolerance + allowance);
  e["truncationAllowance"] = allowance;
  results.push_back(e);
  return results;
}

json run_positive(const RawConfig& raw) {
  DeformationParams params = resolve_params(raw);
  if (!raw.lambda) throw UsageError("positive requires --lambda");
  std::vector<Rational> lambdas = parse_rational_list(*raw.lambda);
  if (!raw.r) throw UsageError("positive requires --r (one |z_k|^2 per mode)");
  std::vector<double> r = parse_double_list(*raw.r);
  if (r.size() != lambdas.size()) throw UsageError("positive: --r length must match --lambda");
  int window;
  if (raw.window) {
    window = std::stoi(*raw.window);
  } else {
    // default policy: expand until both magnitude-series tails drop below 1e-14
    std::vector<double> lambdas_d;
    for (const Rational& l : lambdas) lambdas_d.push_back(to_double(l));
    window = suggest_window(params, lambdas_d, r);
  }
  PositiveEnergyConfig config = PositiveEnergyConfig::make(params, std::move(lambdas), window);

  PositiveFamily family = build_positive_coherent(config);
  json results = json::array();

  for (int mode = 1; mode <= config.n_modes(); ++mode) {
    LatticeEigenReport rep = check_raising_eigenproblem(family, mode, r);
    json e = check_entry("positive.eigenproblem[" + std::to_string(mode) + "]",
                         "relations.md#positive", rep.exact_match ? 0.0 : 1.0, rep.exact_match);
    e["compared"] = rep.compared;
    e["boundaryResidue"] = rep.boundary_residue;
    results.push_back(e);
  }

  double c = positive_normalization(config, r);
  double direct = direct_magnitude_sum(family, r);
  double rel_err = std::abs(1.0 / (c * c) - direct) / direct;
  json e = check_entry("positive.normalization", "relations.md#positive", rel_err,
                       rel_err <= 1e-8);
  e["value"] = c;
  results.push_back(e);

  for (int mode = 1; mode <= config.n_modes(); ++mode) {
    double lambda = config.lambdas[static_cast<std::size_t>(mode - 1)];
    double psi = bilateral_psi01(-config.nu() / lambda, params.p,
                                 -r[static_cast<std::size_t>(mode - 1)] / lambda);
    results.push_back(value_entry("positive.psi01[" + std::to_string(mode) + "]",
                                  "relations.md#positive", psi));
  }
  return results;
}

json run_qsym_resolve(const RawConfig& raw) {
  int nmax = raw.nmax ? std::stoi(*raw.nmax) : 5;
  int alphabet = raw.alphabet ? std::stoi(*raw.alphabet) : 3;
  std::vector<DeformationParams> grid;
  if (raw.p) {
    grid.push_back(resolve_params(raw));
  } else {
    for (const char* p : {"3/10", "7/10", "3/2"}) {
      grid.push_back(DeformationParams::from_text(p, 0.0));
      grid.push_back(DeformationParams::from_text(p, M_PI / 7));
    }
  }
  ResolveReport report = resolve_convention(nmax, alphabet, grid);

  // Rejected conventions are evidence, not failed checks; only the summary
  // (at least one satisfying convention) gates the run.
  json results = json::array();
  for (const ConventionVerdict& v : report.verdicts) {
    json e;
    e["label"] = "resolve." + v.convention.describe();
    e["paperRef"] = "relations.md#qsym";
    e["satisfies"] = v.satisfies;
    if (!v.satisfies) e["counterexample"] = v.counterexample;
    results.push_back(e);
  }
  json summary;
  summary["label"] = "resolve.summary";
  summary["paperRef"] = "relations.md#qsym";
  summary["pass"] = report.resolved.has_value();
  summary["wordsProbed"] = report.words_probed;
  if (report.resolved) summary["value"] = report.resolved->describe();
  results.push_back(summary);
  return results;
}

json run_qsym(const RawConfig& raw) {
  if (raw.resolve_flag) return run_qsym_resolve(raw);
  DeformationParams params = resolve_params(raw);
  if (!raw.word) throw UsageError("qsym requires --word (comma-separated letters)");
  QWord word{parse_int_list(*raw.word)};
  Convention conv = resolved_convention();

  QSymState state = build_qsym_state(word, params, conv);
  json results = json::array();

  double norm_res = qsym_norm_residual(state, params);
  json e = check_entry("qsym.norm", "relations.md#qsym", norm_res, norm_res <= 1e-12);
  e["exactZero"] = qsym_norm_is_one(state, params);
  e["convention"] = conv.describe();
  results.push_back(e);

  for (int k = 1; k < word.size(); ++k) {
    ExchangeReport ex = exchange_check(word, k, params, conv);
    json x = check_entry("qsym.exchange[" + std::to_string(k) + "]", "relations.md#qsym",
                         ex.residual, ex.exact);
    x["phaseExponent"] = ex.phase_exponent;
    results.push_back(x);
  }

  bool inverse_ok = true;
  for (int k = 1; k < word.size(); ++k) {
    QSymState twice = transition_apply(k, transition_apply(k, state, params), params);
    inverse_ok = inverse_ok && twice.amplitudes == state.amplitudes;
  }
  results.push_back(check_entry("qsym.transition-inverse", "relations.md#qsym",
                                inverse_ok ? 0.0 : 1.0, inverse_ok));

  IdentityReport id = multinomial_identity_check(word.profile(), params, conv);
  json ide = check_entry("qsym.multinomial-identity", "relations.md#qsym",
                         std::abs(id.lhs - id.rhs), id.pass);
  if (!id.note.empty()) ide["note"] = id.note;
  results.push_back(ide);
  return results;
}

int emit(const RawConfig& raw, json& results, const std::optional<std::string>& error) {
  bool overall = !error.has_value();
  for (const json& e : results)
    overall = overall && (!e.contains("pass") || e.at("pass").get<bool>());
  sort_results(results);

  json report;
  report["version"] = kVersion;
  report["timestamp"] = iso_timestamp();
  report["config"] = config_json(raw);
  report["results"] = results;
  if (error) report["error"] = *error;
  report["overallPass"] = overall;

  std::ostringstream body;
  if (raw.format == "json") {
    body << report.dump(2) << "\n";
  } else if (raw.format == "text") {
    body << "qosc " << kVersion << " | " << raw.command << "\n";
    if (error) body << "error: " << *error << "\n";
    for (const json& e : results) {
      std::string tag = "info";
      if (e.contains("pass")) tag = e.at("pass").get<bool>() ? "pass" : "FAIL";
      else if (e.contains("satisfies")) tag = e.at("satisfies").get<bool>() ? "sat " : "rej ";
      body << tag << "  " << e.at("label").get<std::string>();
      if (e.contains("maxResidual")) body << "  maxResidual=" << e.at("maxResidual").dump();
      if (e.contains("value")) body << "  value=" << e.at("value").dump();
      if (e.contains("counterexample")) body << "  [" << e.at("counterexample").get<std::string>() << "]";
      body << "\n";
    }
    body << (overall ? "overall: pass" : "overall: FAIL") << "\n";
  } else {
    throw UsageError("unknown --format '" + raw.format + "'");
  }

  if (raw.out) {
    std::ofstream of(*raw.out);
    if (!of) throw UsageError("cannot open output file '" + *raw.out + "'");
    of << body.str();
  } else {
    std::cout << body.str();
  }
  if (error) return 3;
  return overall ? 0 : 1;
}

void add_common_options(CLI::App* cmd, RawConfig& raw, std::string& config_path) {
  cmd->add_option("--p", raw.p, "deformation parameter p (decimal or a/b; parsed exactly)");
  cmd->add_option("--theta", raw.theta, "q phase angle in radians");
  cmd->add_option("--theta-pi-over", raw.theta_pi_over, "set theta = pi/K");
  cmd->add_option("--tolerance", raw.tolerance, "pass/fail tolerance");
  cmd->add_flag("--exact", raw.exact, "exact rational/radical arithmetic");
  cmd->add_option("--out", raw.out, "write the report to this path");
  cmd->add_option("--format", raw.format, "json|text")
      ->capture_default_str()
      ->each([&raw](const std::string&) { raw.format_from_flag = true; });
  cmd->add_option("--config", config_path, "flat key = value config file; flags override");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-parameter deformed multimode oscillator toolkit"};
  app.require_subcommand(1);

  RawConfig raw;
  std::string config_path;

  CLI::App* eval = app.add_subcommand("eval", "evaluate a deformed special function");
  eval->add_option("--fn", raw.fn, "bracket|factorial|pochhammer|ep|psi01|step");
  eval->add_option("--a", raw.a, "series parameter a");
  eval->add_option("--x", raw.x, "argument x");
  eval->add_option("--n", raw.n, "integer index n");
  eval->add_option("--base", raw.base, "bracket base (defaults to p)");
  add_common_options(eval, raw, config_path);

  CLI::App* verify = app.add_subcommand("verify", "run relation-verification suites");
  verify->add_option("--suite", raw.suite,
                     "oscillator|conjugates|subhamiltonian|gl|hermiticity|number|classical|all");
  verify->add_option("--modes", raw.modes, "number of modes");
  verify->add_option("--cutoff", raw.cutoff, "per-mode cutoff (int or comma list)");
  add_common_options(verify, raw, config_path);

  CLI::App* coherent = app.add_subcommand("coherent", "lowering-eigenstate coherent states");
  coherent->add_option("--modes", raw.modes, "number of modes");
  coherent->add_option("--cutoff", raw.cutoff, "total-occupation cutoff");
  coherent->add_option("--r", raw.r, "|z_i|^2 magnitudes, comma list");
  add_common_options(coherent, raw, config_path);

  CLI::App* positive = app.add_subcommand("positive", "raising-eigenstate coherent states");
  positive->add_option("--lambda", raw.lambda, "lattice scales, comma list");
  positive->add_option("--window", raw.window, "symmetric window half-width");
  positive->add_option("--r", raw.r, "|z_k|^2 magnitudes, comma list");
  add_common_options(positive, raw, config_path);

  CLI::App* qsym = app.add_subcommand("qsym", "q-symmetric many-particle states");
  qsym->add_option("--word", raw.word, "input word, comma list of letters");
  qsym->add_flag("--resolve", raw.resolve_flag, "probe the convention space instead");
  qsym->add_option("--nmax", raw.nmax, "probe bound on the word length");
  qsym->add_option("--alphabet", raw.alphabet, "probe bound on the alphabet");
  add_common_options(qsym, raw, config_path);

  CLI::App* resolve = app.add_subcommand("resolve", "exhaustive convention probe");
  resolve->add_option("--nmax", raw.nmax, "probe bound on the word length");
  resolve->add_option("--alphabet", raw.alphabet, "probe bound on the alphabet");
  add_common_options(resolve, raw, config_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  if (eval->parsed()) raw.command = "eval";
  if (verify->parsed()) raw.command = "verify";
  if (coherent->parsed()) raw.command = "coherent";
  if (positive->parsed()) raw.command = "positive";
  if (qsym->parsed()) raw.command = "qsym";
  if (resolve->parsed()) raw.command = "resolve";

  json results = json::array();
  try {
    if (!config_path.empty()) apply_config_file(config_path, raw);

    if (raw.command == "eval") results = run_eval(raw);
    else if (raw.command == "verify") results = run_verify(raw);
    else if (raw.command == "coherent") results = run_coherent(raw);
    else if (raw.command == "positive") results = run_positive(raw);
    else if (raw.command == "qsym") results = run_qsym(raw);
    else if (raw.command == "resolve") results = run_qsym_resolve(raw);

    return emit(raw, results, std::nullopt);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    std::cerr << "run with --help for the flag reference\n";
    return 2;
  } catch (const argument_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const pqosc::domain_error& e) {
    std::optional<std::string> msg(e.what());
    try {
      return emit(raw, results, msg);
    } catch (...) {
      std::cerr << "domain error: " << e.what() << "\n";
      return 3;
    }
  } catch (const config_error& e) {
    std::optional<std::string> msg(e.what());
    try {
      return emit(raw, results, msg);
    } catch (...) {
      std::cerr << "configuration error: " << e.what() << "\n";
      return 3;
    }
  }
  return 0;
}
