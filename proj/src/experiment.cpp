#include "lipopt/experiment.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <set>

#include "json.hpp"
#include "lipopt/emit.hpp"
#include "lipopt/errors.hpp"
#include "lipopt/expr.hpp"

namespace lipopt {

using ordered_json = nlohmann::ordered_json;

Objective resolve_function(const std::string& text) {
  try {
    return lookup(text).objective;
  } catch (const UnknownFunctionError&) {
  }
  try {
    return parse_expression(text).to_objective();
  } catch (const UnknownIdentifierError&) {
    // looked like a name, not an expression: report the registry miss
    bool name_like = !text.empty();
    for (char c : text)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') name_like = false;
    if (name_like) lookup(text);  // throws UnknownFunctionError with the name list
    throw;
  }
}

Interval resolve_domain(const ExperimentConfig& cfg) {
  if (cfg.domain) return *cfg.domain;
  try {
    return lookup(cfg.function).default_domain;
  } catch (const UnknownFunctionError&) {
    throw InvalidConfigError("expression functions need an explicit domain");
  }
}

double default_x0(const std::string& function, const Interval& domain) {
  if (function == "f1") return 1.0;
  if (function == "f2") return 0.5;
  if (function == "f3") return 25.0;
  if (function == "quad") return 0.0;
  return domain.lo() + 0.5 * domain.width();
}

namespace {

void validate_emit(const std::vector<std::string>& emit) {
  if (emit.empty()) throw InvalidConfigError("emit must list at least one output format");
  for (const auto& e : emit)
    if (e != "csv" && e != "json" && e != "svg" && e != "table")
      throw InvalidConfigError("unknown emit format '" + e + "' (csv, json, svg, table)");
}

std::string unique_label(const std::string& base, std::set<std::string>& used) {
  std::string label = base;
  for (int i = 2; used.count(label); ++i) label = base + "_" + std::to_string(i);
  used.insert(label);
  return label;
}

}  // namespace

std::string function_slug(const std::string& function) {
  std::string slug;
  for (char c : function) {
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-')
      slug += c;
    else
      slug += '_';
    if (slug.size() >= 40) break;
  }
  if (slug.empty()) slug = "expr";
  return slug;
}

ExperimentOutput execute_experiment(const ExperimentConfig& cfg) {
  if (cfg.algorithms.empty())
    throw InvalidConfigError("experiment needs at least one algorithm");
  validate_emit(cfg.emit);

  Objective f = resolve_function(cfg.function);
  const Interval domain = resolve_domain(cfg);
  const OracleResult oracle = grid_oracle(f, domain, cfg.oracle_n, cfg.oracle_refine);

  ExperimentOutput out{ExperimentReport{cfg.function, domain.lo(), domain.hi(), oracle, {}},
                       {},
                       f,
                       domain};
  std::set<std::string> used_labels;

  for (const auto& spec : cfg.algorithms) {
    AlgorithmResult res;
    if (const auto* sa = std::get_if<SugdAlgorithm>(&spec)) {
      res.kind = "sugd";
      res.label = unique_label("sugd", used_labels);
      try {
        SuGDConfig sc = sa->config;
        if (sa->estimate_k)
          sc.lipschitz = estimate_lipschitz(f, domain, sa->k_samples, sa->k_safety).k_hat;
        sc.record_trace = true;
        const SuGDConfig resolved = resolve_sugd_config(sc, domain);
        SuGDRun run = sugd_run(f, domain, sc);
        res.x_min = run.result.x_min;
        res.f_min = run.result.f_min;
        res.gap = run.result.f_min - oracle.f_star;
        res.iters = run.result.iters;
        res.evals = run.result.evals;
        res.termination = to_string(run.result.termination);
        res.converged = run.result.converged;
        res.x_best_seen = run.result.x_best_seen;
        res.f_best_seen = run.result.f_best_seen;
        res.alpha = *resolved.alpha;
        res.lipschitz = sc.lipschitz;
        out.traces.push_back({res.label, std::move(run.trace)});
      } catch (const Error& e) {
        res.error = e.what();
      }
    } else {
      const auto& ba = std::get<BaselineAlgorithm>(spec);
      res.kind = to_string(ba.config.kind);
      res.label = unique_label(res.kind, used_labels);
      try {
        const double x0 = ba.x0 ? *ba.x0 : default_x0(cfg.function, domain);
        BaselineRun run = baseline_run(f, domain, x0, ba.config);
        res.x_min = run.result.x;
        res.f_min = run.result.f_x;
        res.gap = run.result.f_x - oracle.f_star;
        res.iters = run.result.iters;
        res.evals = run.result.evals;
        res.termination = to_string(run.result.termination);
        res.converged = run.result.termination == BaselineTermination::GradTol;
        res.x0 = x0;
        res.lr = ba.config.lr;
        out.traces.push_back({res.label, std::move(run.trace)});
      } catch (const Error& e) {
        res.error = e.what();
      }
    }
    out.report.algorithms.push_back(std::move(res));
  }
  return out;
}

std::string run_experiment(const ExperimentConfig& cfg, ExperimentOutput* keep) {
  ExperimentOutput out = execute_experiment(cfg);

  std::string dir = cfg.output_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv("LIPOPT_OUT")) dir = env;
    if (dir.empty()) dir = ".";
  }
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir + ": " + ec.message());

  const std::filesystem::path base(dir);
  const std::string slug = function_slug(cfg.function);
  auto wants = [&](const char* what) {
    return std::find(cfg.emit.begin(), cfg.emit.end(), what) != cfg.emit.end();
  };

  if (wants("csv"))
    for (const auto& nt : out.traces)
      std::visit([&](const auto& t) { emit_trace_csv(t, base / (slug + "_" + nt.label + ".csv")); },
                 nt.trace);
  if (wants("json")) emit_report_json(out.report, base / (slug + "_report.json"));
  if (wants("svg"))
    emit_plot_svg(out.report, out.traces, out.objective, out.domain, base / (slug + ".svg"));

  std::string table;
  if (wants("table")) {
    table = render_table(out.report);
    write_text_file(base / (slug + "_table.txt"), table);
  }
  if (keep) *keep = std::move(out);
  return table;
}

// ---------------------------------------------------------------------------
// JSON config ingestion
// ---------------------------------------------------------------------------

namespace {

void reject_unknown_keys(const ordered_json& j, const std::set<std::string>& allowed,
                         const std::string& context) {
  for (const auto& [key, _] : j.items())
    if (!allowed.count(key))
      throw InvalidConfigError("unknown key '" + key + "' in " + context);
}

Interval interval_from_json(const ordered_json& j) {
  if (!j.is_array() || j.size() != 2)
    throw InvalidConfigError("domain must be a [lo, hi] array");
  return Interval(j[0].get<double>(), j[1].get<double>());
}

AlgorithmSpec algorithm_from_json(const ordered_json& j) {
  if (!j.is_object()) throw InvalidConfigError("algorithm entries must be objects");
  const std::string algo = j.value("algo", std::string());
  if (algo.empty()) throw InvalidConfigError("algorithm entry needs an 'algo' key");

  if (algo == "sugd") {
    reject_unknown_keys(j,
                        {"algo", "alpha", "tol", "max_iters", "k", "estimate_k", "k_samples",
                         "k_safety", "epsilon", "force"},
                        "sugd algorithm");
    SugdAlgorithm sa;
    if (j.contains("alpha")) sa.config.alpha = j["alpha"].get<double>();
    if (j.contains("tol")) sa.config.tol = j["tol"].get<double>();
    if (j.contains("max_iters")) sa.config.max_iters = j["max_iters"].get<long long>();
    if (j.contains("k")) sa.config.lipschitz = j["k"].get<double>();
    if (j.contains("epsilon")) sa.config.epsilon_target = j["epsilon"].get<double>();
    if (j.contains("force")) sa.config.force = j["force"].get<bool>();
    if (j.contains("estimate_k")) sa.estimate_k = j["estimate_k"].get<bool>();
    if (j.contains("k_samples")) sa.k_samples = j["k_samples"].get<long long>();
    if (j.contains("k_safety")) sa.k_safety = j["k_safety"].get<double>();
    if (sa.estimate_k && sa.config.lipschitz)
      throw InvalidConfigError("give either k or estimate_k, not both");
    return sa;
  }

  const auto kind = baseline_kind_from_string(algo);
  if (!kind)
    throw InvalidConfigError("unknown algo '" + algo +
                             "' (sugd, gd, adagrad, rmsprop, adam, adamw, nag)");
  reject_unknown_keys(j,
                      {"algo", "x0", "lr", "grad_tol", "max_iters", "fd_scheme", "fd_h",
                       "eps_num", "beta1", "beta2", "rho", "weight_decay", "momentum"},
                      algo + " algorithm");
  BaselineAlgorithm ba;
  ba.config.kind = *kind;
  if (j.contains("x0")) ba.x0 = j["x0"].get<double>();
  if (j.contains("lr")) ba.config.lr = j["lr"].get<double>();
  if (j.contains("grad_tol")) ba.config.grad_tol = j["grad_tol"].get<double>();
  if (j.contains("max_iters")) ba.config.max_iters = j["max_iters"].get<long long>();
  if (j.contains("fd_h")) ba.config.fd_h = j["fd_h"].get<double>();
  if (j.contains("eps_num")) ba.config.eps_num = j["eps_num"].get<double>();
  if (j.contains("beta1")) ba.config.beta1 = j["beta1"].get<double>();
  if (j.contains("beta2")) ba.config.beta2 = j["beta2"].get<double>();
  if (j.contains("rho")) ba.config.rho = j["rho"].get<double>();
  if (j.contains("weight_decay")) ba.config.weight_decay = j["weight_decay"].get<double>();
  if (j.contains("momentum")) ba.config.momentum = j["momentum"].get<double>();
  if (j.contains("fd_scheme")) {
    const auto scheme = grad_scheme_from_string(j["fd_scheme"].get<std::string>());
    if (!scheme)
      throw InvalidConfigError("unknown fd_scheme (forward, backward, central, analytic)");
    ba.config.fd_scheme = *scheme;
  }
  return ba;
}

ExperimentConfig experiment_from_json_value(const ordered_json& j) {
  if (!j.is_object()) throw InvalidConfigError("experiment config must be a JSON object");
  reject_unknown_keys(
      j, {"function", "domain", "algorithms", "oracle_n", "oracle_refine", "output_dir", "emit"},
      "experiment config");
  ExperimentConfig cfg;
  if (!j.contains("function")) throw InvalidConfigError("experiment config needs 'function'");
  cfg.function = j["function"].get<std::string>();
  if (j.contains("domain")) cfg.domain = interval_from_json(j["domain"]);
  if (j.contains("oracle_n")) cfg.oracle_n = j["oracle_n"].get<long long>();
  if (j.contains("oracle_refine")) cfg.oracle_refine = j["oracle_refine"].get<bool>();
  if (j.contains("output_dir")) cfg.output_dir = j["output_dir"].get<std::string>();
  if (j.contains("emit")) {
    cfg.emit.clear();
    for (const auto& e : j["emit"]) cfg.emit.push_back(e.get<std::string>());
  }
  validate_emit(cfg.emit);
  if (!j.contains("algorithms") || !j["algorithms"].is_array() || j["algorithms"].empty())
    throw InvalidConfigError("experiment config needs a non-empty 'algorithms' array");
  for (const auto& ja : j["algorithms"]) cfg.algorithms.push_back(algorithm_from_json(ja));
  return cfg;
}

ordered_json parse_json(const std::string& text, const char* what) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidConfigError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

ExperimentConfig experiment_config_from_json(const std::string& text) {
  return experiment_from_json_value(parse_json(text, "config JSON parse error"));
}

std::vector<ExperimentConfig> compare_configs_from_json(const std::string& text) {
  const ordered_json j = parse_json(text, "config JSON parse error");
  if (!j.is_object()) throw InvalidConfigError("compare config must be a JSON object");
  reject_unknown_keys(j, {"experiments", "output_dir", "emit"}, "compare config");
  if (!j.contains("experiments") || !j["experiments"].is_array() || j["experiments"].empty())
    throw InvalidConfigError("compare config needs a non-empty 'experiments' array");
  std::vector<ExperimentConfig> configs;
  for (const auto& je : j["experiments"]) {
    ExperimentConfig cfg = experiment_from_json_value(je);
    if (cfg.output_dir.empty() && j.contains("output_dir"))
      cfg.output_dir = j["output_dir"].get<std::string>();
    if (!je.contains("emit") && j.contains("emit")) {
      cfg.emit.clear();
      for (const auto& e : j["emit"]) cfg.emit.push_back(e.get<std::string>());
      validate_emit(cfg.emit);
    }
    configs.push_back(std::move(cfg));
  }
  return configs;
}

std::vector<ExperimentConfig> default_compare_suite() {
  std::vector<ExperimentConfig> suite;
  for (const char* fn : {"f1", "f2", "f3"}) {
    ExperimentConfig cfg;
    cfg.function = fn;
    cfg.emit = {"csv", "json", "svg", "table"};
    SugdAlgorithm sugd;
    sugd.config.alpha = 1e-3;
    sugd.config.tol = 1e-6;
    cfg.algorithms.push_back(sugd);
    for (BaselineKind kind : {BaselineKind::GD, BaselineKind::AdaGrad, BaselineKind::RMSprop,
                              BaselineKind::Adam, BaselineKind::AdamW, BaselineKind::NAG}) {
      BaselineAlgorithm ba;
      ba.config.kind = kind;
      cfg.algorithms.push_back(ba);
    }
    suite.push_back(std::move(cfg));
  }
  return suite;
}

}  // namespace lipopt
