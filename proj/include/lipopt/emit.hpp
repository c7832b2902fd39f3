#pragma once

#include <filesystem>
#include <string>

#include "lipopt/report.hpp"

namespace lipopt {

/// Shortest decimal form that round-trips to the same double.
std::string format_double(double v);

// CSV schemas (headers are part of the stable surface):
//   bracket trace: iter,x1,x2,f_x1,f_x2,width_metric
//   point trace:   iter,x,f_x,grad,evals
std::string trace_to_csv(const BracketTrace& trace);
std::string trace_to_csv(const PointTrace& trace);
BracketTrace bracket_trace_from_csv(const std::string& text);
PointTrace point_trace_from_csv(const std::string& text);

void emit_trace_csv(const BracketTrace& trace, const std::filesystem::path& path);
void emit_trace_csv(const PointTrace& trace, const std::filesystem::path& path);

/// Deterministic report JSON: fixed key order, shortest round-trip floats,
/// non-finite values as null. Identical reports give identical bytes.
std::string report_to_json(const ExperimentReport& report);
ExperimentReport report_from_json(const std::string& text);
void emit_report_json(const ExperimentReport& report, const std::filesystem::path& path);

/// Field-by-field equality where NaN compares equal to NaN.
bool reports_equivalent(const ExperimentReport& a, const ExperimentReport& b);

/// Fixed-width text, one row per algorithm, sorted by gap ascending
/// (failed runs last).
std::string render_table(const ExperimentReport& report);

/// Static SVG 1.1: the objective over the domain with each algorithm's
/// iterate path, plus an objective-vs-iteration panel. No timestamps;
/// identical inputs give identical bytes.
std::string render_plot_svg(const ExperimentReport& report, const std::vector<NamedTrace>& traces,
                            const Objective& f, const Interval& domain);
void emit_plot_svg(const ExperimentReport& report, const std::vector<NamedTrace>& traces,
                   const Objective& f, const Interval& domain,
                   const std::filesystem::path& path);

void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace lipopt
