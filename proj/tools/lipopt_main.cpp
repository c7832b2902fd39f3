#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lipopt/emit.hpp"
#include "lipopt/errors.hpp"
#include "lipopt/experiment.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitIo = 4;

int exit_code_for(const lipopt::Error& e) {
  switch (e.error_class()) {
    case lipopt::ErrorClass::Config: return kExitConfig;
    case lipopt::ErrorClass::Numeric: return kExitNumeric;
    case lipopt::ErrorClass::Io: return kExitIo;
  }
  return kExitNumeric;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw lipopt::IoError("cannot read config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

lipopt::Interval parse_domain_arg(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw lipopt::InvalidConfigError("--domain expects lo:hi, got '" + text + "'");
  try {
    return lipopt::Interval(std::stod(text.substr(0, colon)), std::stod(text.substr(colon + 1)));
  } catch (const std::logic_error&) {
    throw lipopt::InvalidConfigError("--domain expects numeric lo:hi, got '" + text + "'");
  }
}

struct MinimizeArgs {
  std::string function;
  std::string domain;
  std::string algo = "sugd";
  std::string trace_path;
  // sugd
  std::optional<double> alpha;
  double tol = 1e-6;
  std::optional<double> k;
  bool estimate_k = false;
  std::optional<double> epsilon;
  bool force = false;
  // shared / baselines
  std::optional<long long> max_iters;
  std::optional<double> x0;
  double lr = 0.01;
  double grad_tol = 1e-8;
  std::string fd_scheme = "central";
  std::optional<double> fd_h;
  double beta1 = 0.9, beta2 = 0.999, eps_num = 1e-8, rho = 0.9;
  double weight_decay = 0.01, momentum = 0.9;
};

int cmd_minimize(const MinimizeArgs& args) {
  using namespace lipopt;
  Objective f = resolve_function(args.function);
  std::optional<Interval> domain;
  if (!args.domain.empty()) domain = parse_domain_arg(args.domain);
  if (!domain) {
    ExperimentConfig probe;
    probe.function = args.function;
    domain = resolve_domain(probe);
  }

  if (args.algo == "sugd") {
    SuGDConfig cfg;
    cfg.alpha = args.alpha;
    cfg.tol = args.tol;
    cfg.max_iters = args.max_iters;
    cfg.lipschitz = args.k;
    cfg.epsilon_target = args.epsilon;
    cfg.force = args.force;
    cfg.record_trace = !args.trace_path.empty();
    if (args.estimate_k) {
      const auto est = estimate_lipschitz(f, *domain);
      cfg.lipschitz = est.k_hat;
      std::printf("k_hat=%s (estimated, samples=%lld, safety=%s)\n",
                  format_double(est.k_hat).c_str(), est.samples,
                  format_double(est.safety_factor).c_str());
    }
    const SuGDConfig resolved = resolve_sugd_config(cfg, *domain);
    const SuGDRun run = sugd_run(f, *domain, cfg);
    std::printf("alpha=%s tol=%s\n", format_double(*resolved.alpha).c_str(),
                format_double(resolved.tol).c_str());
    std::printf("x_min=%s f_min=%s\n", format_double(run.result.x_min).c_str(),
                format_double(run.result.f_min).c_str());
    std::printf("x_best_seen=%s f_best_seen=%s\n", format_double(run.result.x_best_seen).c_str(),
                format_double(run.result.f_best_seen).c_str());
    std::printf("iters=%lld evals=%lld converged=%s termination=%s\n", run.result.iters,
                run.result.evals, run.result.converged ? "true" : "false",
                to_string(run.result.termination));
    if (!args.trace_path.empty()) emit_trace_csv(run.trace, args.trace_path);
    return kExitOk;
  }

  const auto kind = baseline_kind_from_string(args.algo);
  if (!kind)
    throw InvalidConfigError("unknown --algo '" + args.algo +
                             "' (sugd, gd, adagrad, rmsprop, adam, adamw, nag)");
  BaselineConfig cfg;
  cfg.kind = *kind;
  cfg.lr = args.lr;
  cfg.grad_tol = args.grad_tol;
  if (args.max_iters) cfg.max_iters = *args.max_iters;
  cfg.fd_h = args.fd_h;
  cfg.eps_num = args.eps_num;
  cfg.beta1 = args.beta1;
  cfg.beta2 = args.beta2;
  cfg.rho = args.rho;
  cfg.weight_decay = args.weight_decay;
  cfg.momentum = args.momentum;
  const auto scheme = grad_scheme_from_string(args.fd_scheme);
  if (!scheme)
    throw InvalidConfigError("unknown --fd-scheme (forward, backward, central, analytic)");
  cfg.fd_scheme = *scheme;

  const double x0 = args.x0 ? *args.x0 : default_x0(args.function, *domain);
  const BaselineRun run = baseline_run(f, *domain, x0, cfg);
  std::printf("x0=%s lr=%s\n", format_double(x0).c_str(), format_double(cfg.lr).c_str());
  std::printf("x_min=%s f_min=%s\n", format_double(run.result.x).c_str(),
              format_double(run.result.f_x).c_str());
  std::printf("iters=%lld evals=%lld termination=%s\n", run.result.iters, run.result.evals,
              to_string(run.result.termination));
  if (!args.trace_path.empty()) emit_trace_csv(run.trace, args.trace_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lipopt: one-dimensional global minimization and optimizer benchmarking"};
  app.require_subcommand(1);

  // --- run ---
  auto* run_cmd = app.add_subcommand("run", "run one experiment from a JSON config");
  std::string run_config, run_out;
  std::vector<std::string> run_emit;
  run_cmd->add_option("--config", run_config, "experiment config JSON")->required();
  run_cmd->add_option("--out", run_out, "output directory (overrides config)");
  run_cmd->add_option("--emit", run_emit, "output formats (overrides config)");

  // --- minimize ---
  auto* min_cmd = app.add_subcommand("minimize", "minimize one function with one algorithm");
  MinimizeArgs margs;
  min_cmd->add_option("--function", margs.function, "registry name or expression")->required();
  min_cmd->add_option("--domain", margs.domain, "search interval lo:hi");
  min_cmd->add_option("--algo", margs.algo, "sugd | gd | adagrad | rmsprop | adam | adamw | nag");
  min_cmd->add_option("--trace", margs.trace_path, "write the iterate trace CSV here");
  min_cmd->add_option("--alpha", [&margs](const CLI::results_t& r) {
    margs.alpha = std::stod(r[0]); return true; }, "sugd optimization step");
  min_cmd->add_option("--tol", margs.tol, "sugd stopping tolerance");
  auto* k_opt = min_cmd->add_option("--k", [&margs](const CLI::results_t& r) {
    margs.k = std::stod(r[0]); return true; }, "Lipschitz constant");
  auto* est_opt = min_cmd->add_flag("--estimate-k", margs.estimate_k,
                                    "estimate the Lipschitz constant from a sample grid");
  k_opt->excludes(est_opt);
  min_cmd->add_option("--epsilon", [&margs](const CLI::results_t& r) {
    margs.epsilon = std::stod(r[0]); return true; }, "target accuracy used to derive alpha");
  min_cmd->add_flag("--force", margs.force, "run even if alpha*(1+k) >= 1");
  min_cmd->add_option("--max-iters", [&margs](const CLI::results_t& r) {
    margs.max_iters = std::stoll(r[0]); return true; }, "iteration cap");
  min_cmd->add_option("--x0", [&margs](const CLI::results_t& r) {
    margs.x0 = std::stod(r[0]); return true; }, "baseline start point");
  min_cmd->add_option("--lr", margs.lr, "baseline learning rate");
  min_cmd->add_option("--grad-tol", margs.grad_tol, "baseline gradient stopping tolerance");
  min_cmd->add_option("--fd-scheme", margs.fd_scheme, "forward | backward | central | analytic");
  min_cmd->add_option("--fd-h", [&margs](const CLI::results_t& r) {
    margs.fd_h = std::stod(r[0]); return true; }, "finite-difference step");
  min_cmd->add_option("--beta1", margs.beta1, "Adam/AdamW first-moment decay");
  min_cmd->add_option("--beta2", margs.beta2, "Adam/AdamW second-moment decay");
  min_cmd->add_option("--eps-num", margs.eps_num, "numerical-stability constant");
  min_cmd->add_option("--rho", margs.rho, "RMSprop decay");
  min_cmd->add_option("--weight-decay", margs.weight_decay, "AdamW weight decay");
  min_cmd->add_option("--momentum", margs.momentum, "NAG momentum");

  // --- oracle ---
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force grid minimum of a function");
  std::string oracle_fn, oracle_domain;
  long long oracle_grid = 1'000'000;
  bool oracle_no_refine = false;
  oracle_cmd->add_option("--function", oracle_fn, "registry name or expression")->required();
  oracle_cmd->add_option("--domain", oracle_domain, "search interval lo:hi");
  oracle_cmd->add_option("--grid", oracle_grid, "number of grid points");
  oracle_cmd->add_flag("--no-refine", oracle_no_refine, "skip golden-section refinement");

  // --- compare ---
  auto* cmp_cmd = app.add_subcommand(
      "compare", "run the multi-optimizer comparison (built-in suite unless --config)");
  std::string cmp_config, cmp_out;
  std::vector<std::string> cmp_emit;
  cmp_cmd->add_option("--config", cmp_config, "compare config JSON");
  cmp_cmd->add_option("--out", cmp_out, "output directory")->required();
  cmp_cmd->add_option("--emit", cmp_emit, "output formats (default csv,json,svg,table)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    using namespace lipopt;
    if (*run_cmd) {
      ExperimentConfig cfg = experiment_config_from_json(read_file(run_config));
      if (!run_out.empty()) cfg.output_dir = run_out;
      if (!run_emit.empty()) cfg.emit = run_emit;
      const std::string table = run_experiment(cfg);
      if (!table.empty()) std::fputs(table.c_str(), stdout);
      return kExitOk;
    }
    if (*min_cmd) return cmd_minimize(margs);
    if (*oracle_cmd) {
      Objective f = resolve_function(oracle_fn);
      std::optional<Interval> domain;
      if (!oracle_domain.empty()) domain = parse_domain_arg(oracle_domain);
      if (!domain) {
        ExperimentConfig probe;
        probe.function = oracle_fn;
        domain = resolve_domain(probe);
      }
      const OracleResult res = grid_oracle(f, *domain, oracle_grid, !oracle_no_refine);
      std::printf("x_star=%s f_star=%s grid_points=%lld refined=%s\n",
                  format_double(res.x_star).c_str(), format_double(res.f_star).c_str(),
                  res.grid_points, res.refined ? "true" : "false");
      return kExitOk;
    }
    if (*cmp_cmd) {
      std::vector<ExperimentConfig> configs = cmp_config.empty()
                                                  ? default_compare_suite()
                                                  : compare_configs_from_json(read_file(cmp_config));
      for (auto& cfg : configs) {
        cfg.output_dir = cmp_out;
        if (!cmp_emit.empty()) cfg.emit = cmp_emit;
        std::printf("== %s ==\n", cfg.function.c_str());
        const std::string table = run_experiment(cfg);
        if (!table.empty()) std::fputs(table.c_str(), stdout);
      }
      return kExitOk;
    }
  } catch (const lipopt::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNumeric;
  }
  return kExitConfig;
}
