#pragma once

#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lipopt/baselines.hpp"
#include "lipopt/benchfns.hpp"
#include "lipopt/interval.hpp"
#include "lipopt/sugd.hpp"

namespace lipopt {

struct SugdAlgorithm {
  SuGDConfig config;
  bool estimate_k = false;      // estimate the Lipschitz constant before running
  long long k_samples = 10001;
  double k_safety = 1.5;
};

struct BaselineAlgorithm {
  BaselineConfig config;
  std::optional<double> x0;  // default: the function's documented start point
};

using AlgorithmSpec = std::variant<SugdAlgorithm, BaselineAlgorithm>;

struct ExperimentConfig {
  std::string function;  // registry name or expression text
  std::optional<Interval> domain;
  std::vector<AlgorithmSpec> algorithms;
  long long oracle_n = 1'000'000;
  bool oracle_refine = true;
  std::string output_dir;  // empty: $LIPOPT_OUT, then "."
  std::vector<std::string> emit{"table"};  // csv, json, svg, table
};

struct AlgorithmResult {
  std::string label;  // unique within a report
  std::string kind;   // sugd | gd | adagrad | rmsprop | adam | adamw | nag
  std::string error;  // non-empty when the run failed; other fields then unset

  double x_min = std::numeric_limits<double>::quiet_NaN();
  double f_min = std::numeric_limits<double>::quiet_NaN();
  double gap = std::numeric_limits<double>::quiet_NaN();  // f_min - f_star
  long long iters = 0;
  long long evals = 0;
  std::string termination;
  bool converged = false;

  std::optional<double> x_best_seen;  // sugd only
  std::optional<double> f_best_seen;
  std::optional<double> alpha;        // sugd resolved step
  std::optional<double> lipschitz;    // sugd k (given or estimated)
  std::optional<double> x0;           // baselines
  std::optional<double> lr;
};

struct ExperimentReport {
  std::string function;
  double domain_lo = 0.0;
  double domain_hi = 0.0;
  OracleResult oracle;
  std::vector<AlgorithmResult> algorithms;
};

struct NamedTrace {
  std::string label;
  std::variant<BracketTrace, PointTrace> trace;
};

struct ExperimentOutput {
  ExperimentReport report;
  std::vector<NamedTrace> traces;
  Objective objective;
  Interval domain;
};

}  // namespace lipopt
