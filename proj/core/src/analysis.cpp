#include "casimir/analysis.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>

#include "casimir/error.hpp"
#include "json_support.hpp"

namespace casimir {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_double(std::string_view s, double& out) {
  s = trim(s);
  if (s.empty()) return false;
  // from_chars does not accept a leading '+'
  if (s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size() && std::isfinite(out);
}

}  // namespace

MeasurementSet parse_measurements(std::istream& in) {
  MeasurementSet set;
  std::string line;
  int lineno = 0;
  bool seen_content = false;
  while (std::getline(in, line)) {
    ++lineno;
    const auto text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    if (!seen_content) {
      seen_content = true;
      if (text == "a_nm,F_pN") continue;
    }
    const auto comma = text.find(',');
    double a = 0.0, F = 0.0;
    if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos ||
        !parse_double(text.substr(0, comma), a) || !parse_double(text.substr(comma + 1), F)) {
      throw Error("malformed measurement row at line " + std::to_string(lineno) + ": '" +
                  std::string(text) + "'");
    }
    if (!(a > 0.0)) {
      throw Error("separation must be positive at line " + std::to_string(lineno));
    }
    set.points.push_back({a, F});
  }
  if (set.points.empty()) throw Error("measurement file contains no data points");
  return set;
}

MeasurementSet load_measurements(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open measurement file " + path.string());
  return parse_measurements(in);
}

double rms_deviation(const TheoryCurve& theory, const MeasurementSet& data,
                     const SeparationRange& range) {
  double sum = 0.0;
  int n = 0;
  for (const auto& p : data.points) {
    if (!range.contains(p.a_nm)) continue;
    const double r = theory(p.a_nm) - p.F_pN;
    sum += r * r;
    ++n;
  }
  if (n == 0) throw DomainError("no measurement points inside the comparison range");
  return std::sqrt(sum / n);
}

FitReport compare_distributions(const MeasurementSet& data, const ExperimentConfig& config,
                                const SeparationRange& range, const QuadratureSpec& spec) {
  if (data.points.empty()) throw DomainError("measurement set is empty");
  FitReport report;
  report.range = range;
  report.points_total = static_cast<int>(data.points.size());
  for (const auto& p : data.points) report.points_used += range.contains(p.a_nm) ? 1 : 0;

  for (auto dist : kAllDistributions) {
    const auto theory = [&](double a) { return averaged_force(a, config, dist, spec); };
    report.sigma_pN[static_cast<std::size_t>(dist)] = rms_deviation(theory, data, range);
  }
  // Quadrature noise must not decide between curves that agree.
  const double lowest = *std::min_element(report.sigma_pN.begin(), report.sigma_pN.end());
  for (auto dist : kAllDistributions) {
    if (report.sigma(dist) <= lowest * (1.0 + kSigmaTieTolerance)) {
      report.best = dist;
      break;
    }
  }
  return report;
}

std::string fit_report_to_json(const FitReport& report, const ExperimentConfig& config) {
  nlohmann::json sig;
  for (auto d : kAllDistributions) sig[std::string(to_string(d))] = report.sigma(d);
  nlohmann::json j;
  j["sigma_pN"] = std::move(sig);
  j["best"] = std::string(to_string(report.best));
  j["points_used"] = report.points_used;
  j["points_total"] = report.points_total;
  j["range_nm"] = {report.range.a_min, report.range.a_max};
  j["metadata"] = {{"config", detail::config_json(config)}};
  return j.dump(2);
}

std::string fit_report_to_table(const FitReport& report) {
  std::ostringstream out;
  char line[128];
  std::snprintf(line, sizeof line, "range [%g, %g] nm, %d of %d points\n", report.range.a_min,
                report.range.a_max, report.points_used, report.points_total);
  out << line;
  std::snprintf(line, sizeof line, "%-12s %12s\n", "distribution", "sigma_pN");
  out << line;
  for (auto d : kAllDistributions) {
    std::snprintf(line, sizeof line, "%-12s %12.6f%s\n", std::string(to_string(d)).c_str(),
                  report.sigma(d), d == report.best ? "  *" : "");
    out << line;
  }
  return out.str();
}

}  // namespace casimir
