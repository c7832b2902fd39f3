#include "lipopt/emit.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include "json.hpp"
#include "lipopt/errors.hpp"

namespace lipopt {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

double parse_double_field(std::string_view field, const std::string& context) {
  double v = 0.0;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
  if (res.ec != std::errc() || res.ptr != field.data() + field.size())
    throw InvalidConfigError("bad numeric field '" + std::string(field) + "' in " + context);
  return v;
}

long long parse_int_field(std::string_view field, const std::string& context) {
  long long v = 0;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
  if (res.ec != std::errc() || res.ptr != field.data() + field.size())
    throw InvalidConfigError("bad integer field '" + std::string(field) + "' in " + context);
  return v;
}

std::vector<std::string_view> split_csv_line(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

std::vector<std::string_view> csv_lines(const std::string& text) {
  std::vector<std::string_view> lines;
  std::string_view rest(text);
  while (!rest.empty()) {
    const std::size_t nl = rest.find('\n');
    if (nl == std::string_view::npos) {
      lines.push_back(rest);
      break;
    }
    lines.push_back(rest.substr(0, nl));
    rest.remove_prefix(nl + 1);
  }
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

constexpr const char* kBracketHeader = "iter,x1,x2,f_x1,f_x2,width_metric";
constexpr const char* kPointHeader = "iter,x,f_x,grad,evals";

}  // namespace

std::string trace_to_csv(const BracketTrace& trace) {
  std::string out(kBracketHeader);
  out += '\n';
  for (const auto& r : trace.records) {
    out += std::to_string(r.iter);
    out += ',';
    out += format_double(r.x1);
    out += ',';
    out += format_double(r.x2);
    out += ',';
    out += format_double(r.f1);
    out += ',';
    out += format_double(r.f2);
    out += ',';
    out += format_double(r.width_metric);
    out += '\n';
  }
  return out;
}

std::string trace_to_csv(const PointTrace& trace) {
  std::string out(kPointHeader);
  out += '\n';
  for (const auto& r : trace.records) {
    out += std::to_string(r.iter);
    out += ',';
    out += format_double(r.x);
    out += ',';
    out += format_double(r.f_x);
    out += ',';
    out += format_double(r.grad);
    out += ',';
    out += std::to_string(r.evals);
    out += '\n';
  }
  return out;
}

BracketTrace bracket_trace_from_csv(const std::string& text) {
  const auto lines = csv_lines(text);
  if (lines.empty() || lines[0] != kBracketHeader)
    throw InvalidConfigError("bracket trace CSV must start with header " +
                             std::string(kBracketHeader));
  BracketTrace trace;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split_csv_line(lines[i]);
    if (fields.size() != 6)
      throw InvalidConfigError("bracket trace CSV line " + std::to_string(i + 1) +
                               " has " + std::to_string(fields.size()) + " fields, want 6");
    const std::string ctx = "bracket trace line " + std::to_string(i + 1);
    trace.records.push_back({parse_int_field(fields[0], ctx), parse_double_field(fields[1], ctx),
                             parse_double_field(fields[2], ctx), parse_double_field(fields[3], ctx),
                             parse_double_field(fields[4], ctx),
                             parse_double_field(fields[5], ctx)});
  }
  return trace;
}

PointTrace point_trace_from_csv(const std::string& text) {
  const auto lines = csv_lines(text);
  if (lines.empty() || lines[0] != kPointHeader)
    throw InvalidConfigError("point trace CSV must start with header " +
                             std::string(kPointHeader));
  PointTrace trace;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split_csv_line(lines[i]);
    if (fields.size() != 5)
      throw InvalidConfigError("point trace CSV line " + std::to_string(i + 1) + " has " +
                               std::to_string(fields.size()) + " fields, want 5");
    const std::string ctx = "point trace line " + std::to_string(i + 1);
    trace.records.push_back({parse_int_field(fields[0], ctx), parse_double_field(fields[1], ctx),
                             parse_double_field(fields[2], ctx), parse_double_field(fields[3], ctx),
                             parse_int_field(fields[4], ctx)});
  }
  return trace;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << content;
  if (!out) throw IoError("write failed for " + path.string());
}

void emit_trace_csv(const BracketTrace& trace, const std::filesystem::path& path) {
  write_text_file(path, trace_to_csv(trace));
}

void emit_trace_csv(const PointTrace& trace, const std::filesystem::path& path) {
  write_text_file(path, trace_to_csv(trace));
}

namespace {

ordered_json opt_to_json(const std::optional<double>& v) {
  if (!v || !std::isfinite(*v)) return nullptr;
  return *v;
}

std::optional<double> opt_from_json(const ordered_json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

double double_or_nan(const ordered_json& j) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  return j.get<double>();
}

ordered_json double_to_json(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

}  // namespace

std::string report_to_json(const ExperimentReport& report) {
  ordered_json j;
  j["function"] = report.function;
  j["domain"] = {{"lo", report.domain_lo}, {"hi", report.domain_hi}};
  j["oracle"] = {{"x_star", report.oracle.x_star},
                 {"f_star", report.oracle.f_star},
                 {"grid_points", report.oracle.grid_points},
                 {"refined", report.oracle.refined}};
  j["algorithms"] = ordered_json::array();
  for (const auto& a : report.algorithms) {
    ordered_json ja;
    ja["label"] = a.label;
    ja["kind"] = a.kind;
    ja["error"] = a.error.empty() ? ordered_json(nullptr) : ordered_json(a.error);
    ja["x_min"] = double_to_json(a.x_min);
    ja["f_min"] = double_to_json(a.f_min);
    ja["gap"] = double_to_json(a.gap);
    ja["iters"] = a.iters;
    ja["evals"] = a.evals;
    ja["termination"] = a.termination;
    ja["converged"] = a.converged;
    ja["x_best_seen"] = opt_to_json(a.x_best_seen);
    ja["f_best_seen"] = opt_to_json(a.f_best_seen);
    ja["alpha"] = opt_to_json(a.alpha);
    ja["lipschitz"] = opt_to_json(a.lipschitz);
    ja["x0"] = opt_to_json(a.x0);
    ja["lr"] = opt_to_json(a.lr);
    j["algorithms"].push_back(std::move(ja));
  }
  return j.dump(2) + "\n";
}

ExperimentReport report_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidConfigError(std::string("report JSON parse error: ") + e.what());
  }
  try {
    ExperimentReport r;
    r.function = j.at("function").get<std::string>();
    r.domain_lo = j.at("domain").at("lo").get<double>();
    r.domain_hi = j.at("domain").at("hi").get<double>();
    r.oracle.x_star = j.at("oracle").at("x_star").get<double>();
    r.oracle.f_star = j.at("oracle").at("f_star").get<double>();
    r.oracle.grid_points = j.at("oracle").at("grid_points").get<long long>();
    r.oracle.refined = j.at("oracle").at("refined").get<bool>();
    for (const auto& ja : j.at("algorithms")) {
      AlgorithmResult a;
      a.label = ja.at("label").get<std::string>();
      a.kind = ja.at("kind").get<std::string>();
      a.error = ja.at("error").is_null() ? "" : ja.at("error").get<std::string>();
      a.x_min = double_or_nan(ja.at("x_min"));
      a.f_min = double_or_nan(ja.at("f_min"));
      a.gap = double_or_nan(ja.at("gap"));
      a.iters = ja.at("iters").get<long long>();
      a.evals = ja.at("evals").get<long long>();
      a.termination = ja.at("termination").get<std::string>();
      a.converged = ja.at("converged").get<bool>();
      a.x_best_seen = opt_from_json(ja.at("x_best_seen"));
      a.f_best_seen = opt_from_json(ja.at("f_best_seen"));
      a.alpha = opt_from_json(ja.at("alpha"));
      a.lipschitz = opt_from_json(ja.at("lipschitz"));
      a.x0 = opt_from_json(ja.at("x0"));
      a.lr = opt_from_json(ja.at("lr"));
      r.algorithms.push_back(std::move(a));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidConfigError(std::string("report JSON has unexpected shape: ") + e.what());
  }
}

void emit_report_json(const ExperimentReport& report, const std::filesystem::path& path) {
  write_text_file(path, report_to_json(report));
}

namespace {

bool same_double(double a, double b) {
  if (std::isnan(a) && std::isnan(b)) return true;
  return a == b;
}

bool same_opt(const std::optional<double>& a, const std::optional<double>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || same_double(*a, *b);
}

}  // namespace

bool reports_equivalent(const ExperimentReport& a, const ExperimentReport& b) {
  if (a.function != b.function || !same_double(a.domain_lo, b.domain_lo) ||
      !same_double(a.domain_hi, b.domain_hi))
    return false;
  if (!same_double(a.oracle.x_star, b.oracle.x_star) ||
      !same_double(a.oracle.f_star, b.oracle.f_star) ||
      a.oracle.grid_points != b.oracle.grid_points || a.oracle.refined != b.oracle.refined)
    return false;
  if (a.algorithms.size() != b.algorithms.size()) return false;
  for (std::size_t i = 0; i < a.algorithms.size(); ++i) {
    const auto& x = a.algorithms[i];
    const auto& y = b.algorithms[i];
    if (x.label != y.label || x.kind != y.kind || x.error != y.error ||
        !same_double(x.x_min, y.x_min) || !same_double(x.f_min, y.f_min) ||
        !same_double(x.gap, y.gap) || x.iters != y.iters || x.evals != y.evals ||
        x.termination != y.termination || x.converged != y.converged ||
        !same_opt(x.x_best_seen, y.x_best_seen) || !same_opt(x.f_best_seen, y.f_best_seen) ||
        !same_opt(x.alpha, y.alpha) || !same_opt(x.lipschitz, y.lipschitz) ||
        !same_opt(x.x0, y.x0) || !same_opt(x.lr, y.lr))
      return false;
  }
  return true;
}

std::string render_table(const ExperimentReport& report) {
  std::vector<const AlgorithmResult*> rows;
  rows.reserve(report.algorithms.size());
  for (const auto& a : report.algorithms) rows.push_back(&a);
  std::stable_sort(rows.begin(), rows.end(), [](const AlgorithmResult* a, const AlgorithmResult* b) {
    const bool an = std::isnan(a->gap), bn = std::isnan(b->gap);
    if (an != bn) return bn;  // NaN (failed) rows sink to the bottom
    if (an && bn) return false;
    return a->gap < b->gap;
  });

  char buf[256];
  std::string out;
  std::snprintf(buf, sizeof(buf), "%-12s %-17s %-17s %-12s %9s %10s  %s\n", "algorithm", "x_min",
                "f_min", "gap", "iters", "evals", "termination");
  out += buf;
  out += std::string(90, '-') + "\n";
  for (const AlgorithmResult* a : rows) {
    if (!a->error.empty()) {
      std::snprintf(buf, sizeof(buf), "%-12s error: %s\n", a->label.c_str(), a->error.c_str());
      out += buf;
      continue;
    }
    std::snprintf(buf, sizeof(buf), "%-12s %-17.10g %-17.10g %-12.4g %9lld %10lld  %s\n",
                  a->label.c_str(), a->x_min, a->f_min, a->gap, a->iters, a->evals,
                  a->termination.c_str());
    out += buf;
  }
  return out;
}

// ---------------------------------------------------------------------------
// SVG rendering
// ---------------------------------------------------------------------------

namespace {

const char* kPalette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3",
                          "#ff7f00", "#a65628", "#f781bf", "#999999"};
constexpr int kPaletteSize = 8;

struct Scale {
  double in_lo, in_hi, out_lo, out_hi;
  double operator()(double v) const {
    return out_lo + (v - in_lo) / (in_hi - in_lo) * (out_hi - out_lo);
  }
};

std::string svg_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

void polyline(std::string& out, const std::vector<std::pair<double, double>>& pts,
              const std::string& color, double width, bool dashed = false) {
  if (pts.size() < 2) return;
  out += "<polyline fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" + svg_num(width) +
         "\"";
  if (dashed) out += " stroke-dasharray=\"5,4\"";
  out += " points=\"";
  for (const auto& [x, y] : pts) {
    out += svg_num(x);
    out += ',';
    out += svg_num(y);
    out += ' ';
  }
  out += "\"/>\n";
}

void text_at(std::string& out, double x, double y, const std::string& s,
             const std::string& color = "#222", int size = 12) {
  out += "<text x=\"" + svg_num(x) + "\" y=\"" + svg_num(y) + "\" font-size=\"" +
         std::to_string(size) + "\" font-family=\"monospace\" fill=\"" + color + "\">" + s +
         "</text>\n";
}

}  // namespace

std::string render_plot_svg(const ExperimentReport& report, const std::vector<NamedTrace>& traces,
                            const Objective& f, const Interval& domain) {
  constexpr int kCurveSamples = 800;
  constexpr double W = 920, H = 660;
  constexpr double TOP_X0 = 70, TOP_X1 = 890, TOP_Y0 = 45, TOP_Y1 = 345;
  constexpr double BOT_Y0 = 410, BOT_Y1 = 625;

  // sample the landscape
  std::vector<std::pair<double, double>> curve;
  double fmin = std::numeric_limits<double>::infinity(), fmax = -fmin;
  curve.reserve(kCurveSamples + 1);
  for (int i = 0; i <= kCurveSamples; ++i) {
    const double x = domain.lo() + domain.width() * i / kCurveSamples;
    const double y = f(x);
    if (std::isfinite(y)) {
      curve.emplace_back(x, y);
      fmin = std::min(fmin, y);
      fmax = std::max(fmax, y);
    }
  }
  if (!(fmin < fmax)) { fmin -= 1.0; fmax += 1.0; }
  const double pad = 0.05 * (fmax - fmin);
  Scale sx{domain.lo(), domain.hi(), TOP_X0, TOP_X1};
  Scale sy{fmin - pad, fmax + pad, TOP_Y1, TOP_Y0};

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + svg_num(W) +
         "\" height=\"" + svg_num(H) + "\" viewBox=\"0 0 " + svg_num(W) + " " + svg_num(H) +
         "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  text_at(out, TOP_X0, 25, report.function + "  on [" + format_double(report.domain_lo) + ", " +
                                format_double(report.domain_hi) + "]",
          "#000", 14);

  // top panel frame and curve
  out += "<rect x=\"" + svg_num(TOP_X0) + "\" y=\"" + svg_num(TOP_Y0) + "\" width=\"" +
         svg_num(TOP_X1 - TOP_X0) + "\" height=\"" + svg_num(TOP_Y1 - TOP_Y0) +
         "\" fill=\"none\" stroke=\"#888\"/>\n";
  {
    std::vector<std::pair<double, double>> pts;
    pts.reserve(curve.size());
    for (const auto& [x, y] : curve) pts.emplace_back(sx(x), sy(y));
    polyline(out, pts, "#444444", 1.2);
  }
  // oracle marker
  {
    const double cx = sx(report.oracle.x_star), cy = sy(report.oracle.f_star);
    out += "<circle cx=\"" + svg_num(cx) + "\" cy=\"" + svg_num(cy) +
           "\" r=\"5\" fill=\"none\" stroke=\"#000\" stroke-width=\"1.5\"/>\n";
    text_at(out, cx + 8, cy - 6, "oracle", "#000", 11);
  }

  // iterate paths in (x, f) space
  long long max_iter = 1;
  for (const auto& nt : traces) {
    if (const auto* bt = std::get_if<BracketTrace>(&nt.trace)) {
      if (!bt->records.empty()) max_iter = std::max(max_iter, bt->records.back().iter);
    } else if (const auto* pt = std::get_if<PointTrace>(&nt.trace)) {
      if (!pt->records.empty()) max_iter = std::max(max_iter, pt->records.back().iter);
    }
  }
  Scale bx{0.0, static_cast<double>(max_iter), TOP_X0, TOP_X1};
  Scale by = sy;  // objective scale shared with the top panel
  by.out_lo = BOT_Y1;
  by.out_hi = BOT_Y0;

  out += "<rect x=\"" + svg_num(TOP_X0) + "\" y=\"" + svg_num(BOT_Y0) + "\" width=\"" +
         svg_num(TOP_X1 - TOP_X0) + "\" height=\"" + svg_num(BOT_Y1 - BOT_Y0) +
         "\" fill=\"none\" stroke=\"#888\"/>\n";
  text_at(out, TOP_X0, BOT_Y0 - 10, "objective value by iteration", "#000", 12);

  int color_idx = 0;
  double legend_y = TOP_Y0 + 16;
  for (const auto& nt : traces) {
    const std::string color = kPalette[color_idx % kPaletteSize];
    ++color_idx;
    auto clamp_y = [&](double v) { return std::min(fmax + pad, std::max(fmin - pad, v)); };
    std::vector<std::pair<double, double>> path_xy, path_if;
    if (const auto* bt = std::get_if<BracketTrace>(&nt.trace)) {
      const std::size_t stride = std::max<std::size_t>(1, bt->records.size() / 800);
      std::vector<std::pair<double, double>> right;
      for (std::size_t i = 0; i < bt->records.size(); i += stride) {
        const auto& r = bt->records[i];
        if (std::isfinite(r.f1)) path_xy.emplace_back(sx(r.x1), sy(clamp_y(r.f1)));
        if (std::isfinite(r.f2)) right.emplace_back(sx(r.x2), sy(clamp_y(r.f2)));
        if (std::isfinite(r.f1))
          path_if.emplace_back(bx(static_cast<double>(r.iter)), by(clamp_y(r.f1)));
      }
      polyline(out, path_xy, color, 1.6);
      polyline(out, right, color, 1.0, /*dashed=*/true);
    } else if (const auto* pt = std::get_if<PointTrace>(&nt.trace)) {
      const std::size_t stride = std::max<std::size_t>(1, pt->records.size() / 800);
      for (std::size_t i = 0; i < pt->records.size(); i += stride) {
        const auto& r = pt->records[i];
        if (!std::isfinite(r.x) || !std::isfinite(r.f_x)) continue;
        if (r.x >= domain.lo() && r.x <= domain.hi())
          path_xy.emplace_back(sx(r.x), sy(clamp_y(r.f_x)));
        path_if.emplace_back(bx(static_cast<double>(r.iter)), by(clamp_y(r.f_x)));
      }
      polyline(out, path_xy, color, 1.6);
      if (!path_xy.empty()) {
        const auto& [mx, my] = path_xy.front();
        out += "<circle cx=\"" + svg_num(mx) + "\" cy=\"" + svg_num(my) + "\" r=\"3\" fill=\"" +
               color + "\"/>\n";
      }
    }
    polyline(out, path_if, color, 1.4);
    text_at(out, TOP_X1 - 150, legend_y, nt.label, color, 12);
    legend_y += 15;
  }

  // axis labels
  text_at(out, TOP_X0 - 4, TOP_Y1 + 16, format_double(report.domain_lo), "#444", 11);
  text_at(out, TOP_X1 - 30, TOP_Y1 + 16, format_double(report.domain_hi), "#444", 11);
  text_at(out, TOP_X0 - 4, BOT_Y1 + 16, "0", "#444", 11);
  text_at(out, TOP_X1 - 60, BOT_Y1 + 16, std::to_string(max_iter), "#444", 11);

  out += "</svg>\n";
  return out;
}

void emit_plot_svg(const ExperimentReport& report, const std::vector<NamedTrace>& traces,
                   const Objective& f, const Interval& domain,
                   const std::filesystem::path& path) {
  write_text_file(path, render_plot_svg(report, traces, f, domain));
}

}  // namespace lipopt
