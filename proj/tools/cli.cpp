#include "cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "casimir/analysis.hpp"
#include "casimir/config_io.hpp"
#include "casimir/error.hpp"
#include "casimir/lateral_force.hpp"
#include "casimir/oracle.hpp"
#include "casimir/vertical_force.hpp"

namespace casimir::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string config_path;
  std::string output_path;
  std::string format;

  std::string dist = "uniform";
  double a_min = kValidityMin;
  double a_max = kValidityMax;
  int steps = 62;

  double z0 = 0.0;
  int x0_steps = 256;
  int samples = 4096;

  std::string data_path;
  std::string range = "169.5:400";

  double rel_tol = 1e-9;
  bool quick = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

SeparationRange parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("--range must look like lo:hi");
  try {
    std::size_t used_lo = 0, used_hi = 0;
    const std::string lo = text.substr(0, colon), hi = text.substr(colon + 1);
    SeparationRange r{std::stod(lo, &used_lo), std::stod(hi, &used_hi)};
    if (used_lo != lo.size() || used_hi != hi.size() || !(r.a_max >= r.a_min))
      throw UsageError("--range must look like lo:hi with lo <= hi");
    return r;
  } catch (const std::logic_error&) {
    throw UsageError("--range must look like lo:hi");
  }
}

// Writes either to the --output file or to `out`. When a CSV goes to a
// file, the effective configuration is echoed to <output>.meta.json.
class Sink {
 public:
  Sink(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  void write(const std::string& body, const json& metadata) {
    if (opt_.output_path.empty()) {
      out_ << body;
      return;
    }
    write_file(opt_.output_path, body);
    if (opt_.format == "csv") write_file(opt_.output_path + ".meta.json", metadata.dump(2) + "\n");
  }

 private:
  static void write_file(const std::string& path, const std::string& body) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open output file " + path);
    f << body;
    if (!f) throw Error("failed writing output file " + path);
  }

  const Options& opt_;
  std::ostream& out_;
};

void require_format(const Options& opt, std::initializer_list<const char*> allowed,
                    const char* subcommand) {
  for (const char* a : allowed) {
    if (opt.format == a) return;
  }
  std::string list;
  for (const char* a : allowed) list += list.empty() ? a : std::string("|") + a;
  throw UsageError(std::string("--format for '") + subcommand + "' must be one of " + list);
}

json base_metadata(const ExperimentConfig& config, const char* subcommand) {
  return {{"subcommand", subcommand},
          {"config", json::parse(config_to_json(config, -1))},
          {"config_hash", config_hash(config)}};
}

int run_curve(const Options& opt, const ExperimentConfig& config, std::ostream& out) {
  require_format(opt, {"csv", "json"}, "curve");
  const auto dist = parse_distribution(opt.dist);
  if (!dist) throw UsageError("--dist must be one of uniform|half|triangular|peak");
  const auto curve = make_force_curve(config, *dist, opt.a_min, opt.a_max, opt.steps);

  auto meta = base_metadata(config, "curve");
  meta["distribution"] = opt.dist;
  Sink sink(opt, out);
  if (opt.format == "json") {
    sink.write(curve_to_json(curve) + "\n", meta);
  } else {
    std::ostringstream csv;
    write_curve_csv(csv, curve);
    sink.write(csv.str(), meta);
  }
  return 0;
}

int run_lateral(const Options& opt, const ExperimentConfig& config, std::ostream& out) {
  require_format(opt, {"csv", "json"}, "lateral");
  const auto samples = lateral_map(opt.z0, config, opt.x0_steps);
  auto meta = base_metadata(config, "lateral");
  meta["z0_nm"] = opt.z0;
  meta["second_to_first_harmonic_ratio"] = second_to_first_harmonic_ratio(opt.z0, config);

  Sink sink(opt, out);
  if (opt.format == "json") {
    json rows = json::array();
    for (const auto& s : samples) rows.push_back({{"x0_nm", s.x0_nm}, {"z0_nm", s.z0_nm}, {"Fx_pN", s.Fx_pN}});
    sink.write(json{{"metadata", meta}, {"samples", rows}}.dump(2) + "\n", meta);
  } else {
    std::ostringstream csv;
    write_lateral_csv(csv, samples);
    sink.write(csv.str(), meta);
  }
  return 0;
}

int run_equilibria(const Options& opt, const ExperimentConfig& config, std::ostream& out) {
  require_format(opt, {"json", "text"}, "equilibria");
  EquilibriumSearch search;
  search.samples = opt.samples;
  const auto roots = find_equilibria(opt.z0, config, search);
  auto meta = base_metadata(config, "equilibria");
  meta["z0_nm"] = opt.z0;

  Sink sink(opt, out);
  if (opt.format == "json") {
    sink.write(json{{"metadata", meta}, {"equilibria", json::parse(equilibria_to_json(roots))}}.dump(2) + "\n",
               meta);
  } else {
    std::ostringstream text;
    char line[128];
    std::snprintf(line, sizeof line, "%14s %10s %22s\n", "x0_nm", "stability", "stiffness_pN_per_nm");
    text << line;
    for (const auto& e : roots) {
      std::snprintf(line, sizeof line, "%14.6f %10s %22.6e\n", e.x0,
                    std::string(to_string(e.stability)).c_str(), e.restoring_stiffness);
      text << line;
    }
    sink.write(text.str(), meta);
  }
  return 0;
}

int run_fit(const Options& opt, const ExperimentConfig& config, std::ostream& out) {
  require_format(opt, {"json", "text"}, "fit");
  const auto range = parse_range(opt.range);
  const auto data = load_measurements(opt.data_path);
  const auto report = compare_distributions(data, config, range);
  Sink sink(opt, out);
  if (opt.format == "json") {
    sink.write(fit_report_to_json(report, config) + "\n", {});
  } else {
    sink.write(fit_report_to_table(report), {});
  }
  return 0;
}

int run_validate(const Options& opt, const ExperimentConfig& config, std::ostream& out) {
  require_format(opt, {"json", "text"}, "validate");
  const double L = config.plate.period_L;
  const std::vector<double> x0s = {0.0, L / 8.0, 3.0 * L / 8.0, L / 4.0};
  const std::vector<double> z0s = opt.quick ? std::vector<double>{200.0}
                                            : std::vector<double>{200.0, 300.0, 400.0};
  const std::vector<double> scales = {1.0, 0.5, 0.25, 0.125, 0.0625, 0.01};
  QuadratureSpec spec;
  spec.rel_tol = opt.rel_tol;
  spec.max_subdivisions = 20000;
  const auto rows = validate_lateral_grid(config, x0s, z0s, scales, spec);

  std::ostringstream body;
  body << "cancellation check (C=n_p=n_s=1): "
       << prefactor_cancellation_check(AdditiveConstants(1.0, 1.0, 1.0)) << "\n";
  Sink sink(opt, out);
  if (opt.format == "json") {
    sink.write(oracle_rows_to_json(rows, config) + "\n", {});
  } else {
    body << oracle_rows_to_table(rows);
    sink.write(body.str(), {});
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Casimir force between a sphere and a sinusoidally corrugated plate"};
  app.name("casimir");
  app.fallthrough();
  app.require_subcommand(1, 1);
  app.add_option("--config", opt.config_path, "JSON configuration file (overrides built-in defaults)");
  app.add_option("-o,--output", opt.output_path, "Output file (default: stdout)");
  app.add_option("--format", opt.format, "Output format: csv|json (curve, lateral), json|text (others)");

  auto* curve = app.add_subcommand("curve", "Distribution-averaged vertical force over a separation grid");
  curve->add_option("--dist", opt.dist,
                    "Lateral position distribution: uniform (1/L), half (2/L on the convex half), "
                    "triangular (linear rise to the crest), peak (always over the crest)")
      ->capture_default_str();
  curve->add_option("--amin", opt.a_min, "Smallest separation, nm")->capture_default_str();
  curve->add_option("--amax", opt.a_max, "Largest separation, nm")->capture_default_str();
  curve->add_option("--steps", opt.steps, "Number of separations")->capture_default_str()
      ->check(CLI::PositiveNumber);

  auto* lateral = app.add_subcommand("lateral", "Lateral force over one corrugation period");
  lateral->add_option("--z0", opt.z0, "Height of the sphere bottom above the mean plane, nm")->required();
  lateral->add_option("--x0-steps", opt.x0_steps, "Samples per period")->capture_default_str()
      ->check(CLI::PositiveNumber);

  auto* equilibria = app.add_subcommand("equilibria", "Zeros of the lateral force and their stability");
  equilibria->add_option("--z0", opt.z0, "Height of the sphere bottom above the mean plane, nm")->required();
  equilibria->add_option("--samples", opt.samples, "Sign-change scan points per period")
      ->capture_default_str()->check(CLI::Range(4, 1 << 24));

  auto* fit = app.add_subcommand("fit", "RMS deviation of each distribution from measured data");
  fit->add_option("--data", opt.data_path, "CSV of a_nm,F_pN rows")->required();
  fit->add_option("--range", opt.range, "Inclusive comparison window lo:hi in nm")->capture_default_str();

  auto* validate = app.add_subcommand("validate", "Closed-form lateral force against the brute-force integral");
  validate->add_option("--rel-tol", opt.rel_tol, "Outer quadrature relative tolerance")
      ->capture_default_str()->check(CLI::PositiveNumber);
  validate->add_flag("--quick", opt.quick, "Only z0 = 200 nm");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    const ExperimentConfig config =
        opt.config_path.empty() ? default_experiment() : load_config(opt.config_path);
    if (opt.format.empty()) opt.format = (curve->parsed() || lateral->parsed()) ? "csv" : "json";

    if (curve->parsed()) return run_curve(opt, config, out);
    if (lateral->parsed()) return run_lateral(opt, config, out);
    if (equilibria->parsed()) return run_equilibria(opt, config, out);
    if (fit->parsed()) return run_fit(opt, config, out);
    if (validate->parsed()) return run_validate(opt, config, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace casimir::cli
