#pragma once

#include <string>
#include <vector>

#include "lipopt/report.hpp"

namespace lipopt {

/// Objective for a registry name or, failing that, an expression.
/// A name that is neither raises UnknownFunctionError.
Objective resolve_function(const std::string& text);

/// Search domain for an experiment: explicit domain, else the registry
/// default; expression functions must give one explicitly.
Interval resolve_domain(const ExperimentConfig& cfg);

/// Documented default start point for the named function (baselines):
/// f1 -> 1.0, f2 -> 0.5, f3 -> 25.0, quad -> 0.0; domain midpoint otherwise.
double default_x0(const std::string& function, const Interval& domain);

/// Runs the oracle and every configured algorithm; a per-algorithm failure
/// is recorded in its result row instead of aborting the experiment.
ExperimentOutput execute_experiment(const ExperimentConfig& cfg);

/// execute_experiment plus emission of every requested output into
/// cfg.output_dir (falling back to $LIPOPT_OUT, then "."). Returns the
/// rendered table when "table" is requested (callers print it).
std::string run_experiment(const ExperimentConfig& cfg, ExperimentOutput* out = nullptr);

/// Parses a single-experiment JSON config. Unknown keys are errors.
ExperimentConfig experiment_config_from_json(const std::string& text);

/// Parses a compare config: {"experiments": [...]} with optional shared
/// "output_dir" and "emit" that nested experiments inherit.
std::vector<ExperimentConfig> compare_configs_from_json(const std::string& text);

/// The built-in comparison suite: f1, f2 and f3, each with SuGD plus the six
/// baselines at the documented defaults.
std::vector<ExperimentConfig> default_compare_suite();

/// File-name slug for a function name or expression text.
std::string function_slug(const std::string& function);

}  // namespace lipopt
