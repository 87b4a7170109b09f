#include "conformon/io_cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "conformon/analysis.hpp"
#include "conformon/kirchhoff_static.hpp"
#include "conformon/quantum_transport.hpp"

namespace conformon::io {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

std::string to_string(RunMode mode) {
  switch (mode) {
    case RunMode::Reconstruct: return "reconstruct";
    case RunMode::StaticCheck: return "static-check";
    case RunMode::EvolveLinear: return "evolve-linear";
    case RunMode::EvolveCnlse: return "evolve-cnlse";
    case RunMode::Equivalence: return "equivalence";
    case RunMode::Sweep: return "sweep";
  }
  throw std::logic_error("unreachable mode");
}

RunMode mode_from_string(const std::string& name) {
  if (name == "reconstruct") return RunMode::Reconstruct;
  if (name == "static-check") return RunMode::StaticCheck;
  if (name == "evolve-linear") return RunMode::EvolveLinear;
  if (name == "evolve-cnlse") return RunMode::EvolveCnlse;
  if (name == "equivalence") return RunMode::Equivalence;
  if (name == "sweep") return RunMode::Sweep;
  throw std::invalid_argument("unknown mode '" + name + "'");
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

bool is_evolve_domain(RunMode mode) {
  return mode == RunMode::EvolveLinear || mode == RunMode::EvolveCnlse ||
         mode == RunMode::Equivalence;
}

const std::set<std::string>& allowed_keys(RunMode mode) {
  static const std::set<std::string> reconstruct{
      "mode", "output_dir", "alpha", "c2", "tau0", "allow_zero_alpha",
      "phi", "s1_min", "s1_max", "step"};
  static const std::set<std::string> static_check{
      "mode", "output_dir", "alpha", "c2", "tau0", "allow_zero_alpha",
      "phi", "sigma", "s1_min", "s1_max", "step"};
  static const std::set<std::string> evolve{
      "mode", "output_dir", "alpha", "c2", "tau0", "allow_zero_alpha",
      "v", "s1_min", "s1_max", "n", "du", "n_steps", "record_every"};
  static const std::set<std::string> equivalence{
      "mode", "output_dir", "alpha", "c2", "tau0", "allow_zero_alpha",
      "v", "potential_velocity", "s1_min", "s1_max", "n", "du", "n_steps"};
  static const std::set<std::string> sweep{
      "mode", "output_dir", "c2", "allow_zero_alpha",
      "sweep_parameter", "sweep_values", "phi", "s1_min", "s1_max", "step"};
  switch (mode) {
    case RunMode::Reconstruct: return reconstruct;
    case RunMode::StaticCheck: return static_check;
    case RunMode::EvolveLinear:
    case RunMode::EvolveCnlse: return evolve;
    case RunMode::Equivalence: return equivalence;
    case RunMode::Sweep: return sweep;
  }
  throw std::logic_error("unreachable mode");
}

double number_at(const ordered_json& doc, const std::string& key) {
  const auto& v = doc.at(key);
  if (!v.is_number())
    throw std::invalid_argument("config key '" + key + "' must be a number");
  return v.get<double>();
}

std::size_t count_at(const ordered_json& doc, const std::string& key) {
  const auto& v = doc.at(key);
  if (!v.is_number_integer() || v.get<long long>() <= 0)
    throw std::invalid_argument("config key '" + key + "' must be a positive integer");
  return static_cast<std::size_t>(v.get<long long>());
}

void resolve_alpha_group(const ordered_json& doc, RunConfig& cfg) {
  const bool has_alpha = doc.contains("alpha");
  const bool has_c2 = doc.contains("c2");
  if (doc.contains("tau0")) cfg.tau0 = number_at(doc, "tau0");

  if (has_alpha) cfg.alpha = number_at(doc, "alpha");
  if (has_c2) cfg.c2 = number_at(doc, "c2");

  if (has_alpha && has_c2) {
    const double derived = cfg.c2 - cfg.tau0 * cfg.tau0;
    if (std::abs(cfg.alpha - derived) > kirchhoff::kParamTol)
      throw std::invalid_argument(
          "contradictory parameters: alpha = " + format_double(cfg.alpha) +
          " but c2 - tau0^2 = " + format_double(derived));
  } else if (has_c2) {
    cfg.alpha = cfg.c2 - cfg.tau0 * cfg.tau0;
  } else {
    cfg.c2 = cfg.alpha + cfg.tau0 * cfg.tau0;
  }

  if (cfg.alpha < 0.0)
    throw std::invalid_argument("c2 must exceed tau0^2: c2 = " +
                                format_double(cfg.c2) + ", tau0 = " +
                                format_double(cfg.tau0));
  if (cfg.alpha == 0.0 && !cfg.allow_zero_alpha)
    throw std::invalid_argument(
        "alpha = 0 (straight rod) requires allow_zero_alpha = true");
}

ordered_json tolerance_table() {
  return ordered_json{
      {"frame_orthonormality", rod::kFrameTol},
      {"torsion_curvature_floor", rod::kTorsionKFloor},
      {"parameter_consistency", kirchhoff::kParamTol},
      {"boundary_leak_warn_level", quantum::kLeakWarnLevel},
      {"initial_edge_level", quantum::kInitialEdgeLevel},
      {"moment_edge_leak_fraction", analysis::kEdgeLeakFraction},
  };
}

void write_text_file(const fs::path& file, const std::string& content) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + file.string() + " for writing");
  out << content;
  if (!out) throw std::runtime_error("failed writing " + file.string());
}

void write_json_file(const fs::path& file, const ordered_json& doc) {
  write_text_file(file, doc.dump(2) + "\n");
}

void write_manifest(const RunConfig& cfg, const ordered_json& resolved,
                    const std::vector<std::string>& outputs) {
  ordered_json doc;
  doc["mode"] = to_string(cfg.mode);
  doc["config"] = resolved;
  doc["tolerances"] = tolerance_table();
  doc["outputs"] = outputs;
  write_json_file(cfg.output_dir / "manifest.json", doc);
}

void run_reconstruct(const RunConfig& cfg) {
  const CurvatureProfile profile = CurvatureProfile::sech_profile(cfg.alpha);
  const rod::FramePath path = rod::reconstruct_curve(
      profile, cfg.tau0, cfg.phi, cfg.s1_min, cfg.s1_max, cfg.step);
  write_frame_path_csv(cfg.output_dir / "frame_path.csv", path);

  const std::vector<double> k_fd = rod::curvature_from_curve(path);
  double k_err = 0.0;
  for (std::size_t i = 0; i < k_fd.size(); ++i)
    k_err = std::max(k_err, std::abs(k_fd[i] - profile(path.s1[i + 1])));

  const auto tau_fd = rod::torsion_from_curve(path);
  double tau_err = 0.0;
  std::size_t tau_defined = 0;
  for (const auto& t : tau_fd) {
    if (!t) continue;
    ++tau_defined;
    tau_err = std::max(tau_err, std::abs(*t - cfg.tau0));
  }

  const double min_dist = rod::min_nonlocal_distance(path, 0.1, 0.5);

  ordered_json report{
      {"samples", path.size()},
      {"curvature_roundtrip_max_error", k_err},
      {"torsion_max_deviation", tau_err},
      {"torsion_defined_samples", tau_defined},
      {"min_nonlocal_distance", min_dist},
  };
  write_json_file(cfg.output_dir / "reconstruct_report.json", report);

  const ordered_json resolved{
      {"alpha", cfg.alpha}, {"c2", cfg.c2}, {"tau0", cfg.tau0},
      {"phi", cfg.phi}, {"s1_min", cfg.s1_min}, {"s1_max", cfg.s1_max},
      {"step", cfg.step}, {"allow_zero_alpha", cfg.allow_zero_alpha},
      {"output_dir", cfg.output_dir.string()},
  };
  write_manifest(cfg, resolved, {"frame_path.csv", "reconstruct_report.json"});
}

void run_static_check(const RunConfig& cfg) {
  const kirchhoff::RodParams params =
      kirchhoff::solve_case_phi(cfg.phi, cfg.sigma, cfg.c2, cfg.tau0);

  const auto n = static_cast<std::size_t>(
      std::floor((cfg.s1_max - cfg.s1_min) / cfg.step + 1e-9)) + 1;
  std::vector<double> s1(n), k(n), tau(n), phi_arr(n);
  for (std::size_t i = 0; i < n; ++i) {
    s1[i] = cfg.s1_min + static_cast<double>(i) * cfg.step;
    k[i] = kirchhoff::sech_curvature(cfg.alpha, s1[i]);
    tau[i] = cfg.tau0;
    phi_arr[i] = cfg.phi;
  }

  const kirchhoff::StaticResiduals res = kirchhoff::static_system_residual(
      params, k, tau, phi_arr, cfg.step, std::nullopt);

  std::ostringstream csv;
  csv << "s1,r1,r2,r3,r4,r5,r6\n";
  for (std::size_t i = 0; i < res.r[0].size(); ++i) {
    csv << format_double(s1[res.first_index + i]);
    for (std::size_t j = 0; j < 6; ++j) csv << ',' << format_double(res.r[j][i]);
    csv << '\n';
  }
  write_text_file(cfg.output_dir / "residuals.csv", csv.str());

  const auto max_abs = res.max_abs();
  const auto l2 = res.l2();
  ordered_json norms{
      {"max_abs", std::vector<double>(max_abs.begin(), max_abs.end())},
      {"l2", std::vector<double>(l2.begin(), l2.end())},
  };
  write_json_file(cfg.output_dir / "residual_norms.json", norms);

  const ordered_json resolved{
      {"alpha", cfg.alpha}, {"c2", cfg.c2}, {"tau0", cfg.tau0},
      {"phi", cfg.phi}, {"sigma", cfg.sigma},
      {"derived_a", params.a}, {"derived_b", params.b},
      {"s1_min", cfg.s1_min}, {"s1_max", cfg.s1_max}, {"step", cfg.step},
      {"allow_zero_alpha", cfg.allow_zero_alpha},
      {"output_dir", cfg.output_dir.string()},
  };
  write_manifest(cfg, resolved, {"residuals.csv", "residual_norms.json"});
}

void run_evolve(const RunConfig& cfg) {
  const quantum::SolitonParams p = quantum::soliton_parameters(cfg.alpha, cfg.v);
  const WaveField psi0 = sample_field(
      cfg.n, cfg.s1_min, cfg.s1_max,
      [&p](double s1) { return quantum::analytic_envelope_soliton(p, s1, 0.0); });

  std::ofstream snapshots(cfg.output_dir / "snapshots.csv", std::ios::binary);
  if (!snapshots) throw std::runtime_error("cannot open snapshots.csv for writing");
  snapshots << "u,s1,re_psi,im_psi,abs_psi\n";

  quantum::EvolveOptions options;
  options.record_every = cfg.record_every;
  options.oracle = [p](double s1, double u) {
    return quantum::analytic_envelope_soliton(p, s1, u);
  };
  options.on_record = [&snapshots](const WaveField& f, double u) {
    const std::string u_text = format_double(u);
    for (std::size_t i = 0; i < f.size(); ++i) {
      const auto& z = f.values[i];
      snapshots << u_text << ',' << format_double(f.coord(i)) << ','
                << format_double(z.real()) << ',' << format_double(z.imag())
                << ',' << format_double(std::abs(z)) << '\n';
    }
  };

  quantum::EvolutionResult result =
      cfg.mode == RunMode::EvolveLinear
          ? quantum::evolve_linear(psi0,
                                   CurvatureProfile::kovalevskaya(cfg.alpha, cfg.v),
                                   cfg.du, cfg.n_steps, options)
          : quantum::evolve_cnlse(psi0, cfg.du, cfg.n_steps, options);
  snapshots.close();
  const analysis::EvolutionReport& report = result.second;

  ordered_json report_json{
      {"u", report.times},           {"norm", report.norms},
      {"center", report.centers},    {"width", report.widths},
      {"fidelity", report.fidelities},
      {"boundary_leak_warning", report.boundary_leak_warning},
      {"max_edge_abs", report.max_edge_abs},
  };
  write_json_file(cfg.output_dir / "report.json", report_json);

  const ordered_json resolved{
      {"alpha", cfg.alpha}, {"c2", cfg.c2}, {"tau0", cfg.tau0}, {"v", cfg.v},
      {"s1_min", cfg.s1_min}, {"s1_max", cfg.s1_max}, {"n", cfg.n},
      {"du", cfg.du}, {"n_steps", cfg.n_steps},
      {"record_every", cfg.record_every},
      {"allow_zero_alpha", cfg.allow_zero_alpha},
      {"output_dir", cfg.output_dir.string()},
  };
  write_manifest(cfg, resolved, {"snapshots.csv", "report.json"});
}

void run_equivalence(const RunConfig& cfg) {
  const double u_final = cfg.du * static_cast<double>(cfg.n_steps);
  const quantum::EvolutionGrid grid{cfg.n, cfg.s1_min, cfg.s1_max, cfg.du};
  const double fid = quantum::cnlse_linear_equivalence(
      cfg.alpha, cfg.v, u_final, grid, cfg.potential_velocity);

  ordered_json doc{
      {"alpha", cfg.alpha},
      {"v", cfg.v},
      {"potential_velocity", cfg.potential_velocity.value_or(cfg.v)},
      {"u_final", u_final},
      {"fidelity", fid},
  };
  write_json_file(cfg.output_dir / "equivalence.json", doc);

  ordered_json resolved{
      {"alpha", cfg.alpha}, {"c2", cfg.c2}, {"tau0", cfg.tau0}, {"v", cfg.v},
      {"u_final", u_final},
      {"s1_min", cfg.s1_min}, {"s1_max", cfg.s1_max}, {"n", cfg.n},
      {"du", cfg.du}, {"n_steps", cfg.n_steps},
      {"allow_zero_alpha", cfg.allow_zero_alpha},
      {"output_dir", cfg.output_dir.string()},
  };
  if (cfg.potential_velocity)
    resolved["potential_velocity"] = *cfg.potential_velocity;
  write_manifest(cfg, resolved, {"equivalence.json"});
}

void run_sweep(const RunConfig& cfg) {
  struct Item {
    std::size_t index;
    double tau0;
    double alpha;
    std::string dir;
  };
  std::vector<Item> items;
  for (std::size_t i = 0; i < cfg.sweep_values.size(); ++i) {
    const double tau0 = cfg.sweep_values[i];
    const double alpha = cfg.c2 - tau0 * tau0;
    items.push_back({i, tau0, alpha, "item_" + std::to_string(i)});
  }

  std::vector<std::future<void>> futures;
  futures.reserve(items.size());
  for (const Item& item : items) {
    futures.push_back(std::async(std::launch::async, [&cfg, item]() {
      RunConfig sub = cfg;
      sub.mode = RunMode::Reconstruct;
      sub.tau0 = item.tau0;
      sub.alpha = item.alpha;
      sub.sweep_parameter.clear();
      sub.sweep_values.clear();
      sub.output_dir = cfg.output_dir / item.dir;
      fs::create_directories(sub.output_dir);
      run_reconstruct(sub);
    }));
  }
  std::string failures;
  for (std::size_t i = 0; i < futures.size(); ++i) {
    try {
      futures[i].get();
    } catch (const std::exception& e) {
      failures += "item " + std::to_string(i) + ": " + e.what() + "; ";
    }
  }
  if (!failures.empty())
    throw std::runtime_error("sweep items failed: " + failures);

  std::vector<std::size_t> order(items.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&items](std::size_t a, std::size_t b) {
    return items[a].alpha > items[b].alpha;
  });

  ordered_json summary;
  summary["parameter"] = cfg.sweep_parameter;
  summary["items"] = ordered_json::array();
  for (const Item& item : items) {
    summary["items"].push_back(ordered_json{
        {"index", item.index},
        {"tau0", item.tau0},
        {"alpha", item.alpha},
        {"k_max", 2.0 * std::sqrt(item.alpha)},
        {"dir", item.dir},
    });
  }
  ordered_json ranking = ordered_json::array();
  for (std::size_t idx : order) ranking.push_back(items[idx].index);
  summary["order_by_tightness"] = ranking;
  write_json_file(cfg.output_dir / "sweep_summary.json", summary);

  const ordered_json resolved{
      {"c2", cfg.c2},
      {"sweep_parameter", cfg.sweep_parameter},
      {"sweep_values", cfg.sweep_values},
      {"phi", cfg.phi},
      {"s1_min", cfg.s1_min}, {"s1_max", cfg.s1_max}, {"step", cfg.step},
      {"allow_zero_alpha", cfg.allow_zero_alpha},
      {"output_dir", cfg.output_dir.string()},
  };
  std::vector<std::string> outputs{"sweep_summary.json"};
  for (const Item& item : items) outputs.push_back(item.dir);
  write_manifest(cfg, resolved, outputs);
}

}  // namespace

RunConfig parse_config(const std::string& text,
                       std::optional<RunMode> mode_override) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object())
    throw std::invalid_argument("config must be a JSON object");

  RunConfig cfg;
  if (doc.contains("mode")) {
    if (!doc.at("mode").is_string())
      throw std::invalid_argument("config key 'mode' must be a string");
    cfg.mode = mode_from_string(doc.at("mode").get<std::string>());
    if (mode_override && *mode_override != cfg.mode)
      throw std::invalid_argument("config mode '" + to_string(cfg.mode) +
                                  "' does not match requested mode '" +
                                  to_string(*mode_override) + "'");
  } else if (mode_override) {
    cfg.mode = *mode_override;
  } else {
    throw std::invalid_argument("config needs a 'mode' key");
  }

  const auto& allowed = allowed_keys(cfg.mode);
  for (const auto& [key, value] : doc.items()) {
    if (!allowed.contains(key))
      throw std::invalid_argument("unknown or inapplicable key '" + key +
                                  "' for mode " + to_string(cfg.mode));
  }

  if (is_evolve_domain(cfg.mode)) {
    cfg.s1_min = -40.0;
    cfg.s1_max = 40.0;
  }

  if (doc.contains("output_dir")) {
    if (!doc.at("output_dir").is_string())
      throw std::invalid_argument("config key 'output_dir' must be a string");
    cfg.output_dir = doc.at("output_dir").get<std::string>();
  }
  if (doc.contains("allow_zero_alpha")) {
    if (!doc.at("allow_zero_alpha").is_boolean())
      throw std::invalid_argument("config key 'allow_zero_alpha' must be a boolean");
    cfg.allow_zero_alpha = doc.at("allow_zero_alpha").get<bool>();
  }

  if (doc.contains("s1_min")) cfg.s1_min = number_at(doc, "s1_min");
  if (doc.contains("s1_max")) cfg.s1_max = number_at(doc, "s1_max");
  if (!(cfg.s1_max > cfg.s1_min))
    throw std::invalid_argument("need s1_max > s1_min");

  if (doc.contains("phi")) cfg.phi = number_at(doc, "phi");
  if (std::abs(std::remainder(cfg.phi, kPi / 2.0)) > kirchhoff::kParamTol)
    throw std::invalid_argument("phi must be a multiple of pi/2");
  if (doc.contains("sigma")) cfg.sigma = number_at(doc, "sigma");
  if (doc.contains("v")) cfg.v = number_at(doc, "v");
  if (doc.contains("potential_velocity"))
    cfg.potential_velocity = number_at(doc, "potential_velocity");

  if (doc.contains("step")) cfg.step = number_at(doc, "step");
  if (!(cfg.step > 0.0)) throw std::invalid_argument("step must be positive");
  if (doc.contains("du")) cfg.du = number_at(doc, "du");
  if (!(cfg.du > 0.0)) throw std::invalid_argument("du must be positive");
  if (doc.contains("n")) cfg.n = count_at(doc, "n");
  if (doc.contains("n_steps")) cfg.n_steps = count_at(doc, "n_steps");
  if (doc.contains("record_every")) cfg.record_every = count_at(doc, "record_every");

  if (is_evolve_domain(cfg.mode) && (cfg.n < 16 || !is_power_of_two(cfg.n)))
    throw std::invalid_argument("grid size n must be a power of two >= 16");

  if (cfg.mode == RunMode::Sweep) {
    if (!doc.contains("c2"))
      throw std::invalid_argument("sweep mode requires an explicit c2");
    cfg.c2 = number_at(doc, "c2");
    if (!doc.contains("sweep_parameter") || !doc.at("sweep_parameter").is_string())
      throw std::invalid_argument("sweep mode requires sweep_parameter (string)");
    cfg.sweep_parameter = doc.at("sweep_parameter").get<std::string>();
    if (cfg.sweep_parameter != "tau0")
      throw std::invalid_argument("only tau0 sweeps are supported, got '" +
                                  cfg.sweep_parameter + "'");
    if (!doc.contains("sweep_values") || !doc.at("sweep_values").is_array() ||
        doc.at("sweep_values").empty())
      throw std::invalid_argument("sweep mode requires a nonempty sweep_values array");
    for (const auto& v : doc.at("sweep_values")) {
      if (!v.is_number())
        throw std::invalid_argument("sweep_values entries must be numbers");
      const double tau0 = v.get<double>();
      const double alpha = cfg.c2 - tau0 * tau0;
      if (alpha < 0.0)
        throw std::invalid_argument("sweep value tau0 = " + format_double(tau0) +
                                    " violates c2 > tau0^2 (c2 = " +
                                    format_double(cfg.c2) + ")");
      if (alpha == 0.0 && !cfg.allow_zero_alpha)
        throw std::invalid_argument("sweep value tau0 = " + format_double(tau0) +
                                    " gives alpha = 0; requires allow_zero_alpha");
      cfg.sweep_values.push_back(tau0);
    }
  } else {
    resolve_alpha_group(doc, cfg);
  }

  return cfg;
}

std::string default_config_json(RunMode mode) {
  ordered_json doc;
  doc["mode"] = to_string(mode);
  switch (mode) {
    case RunMode::Reconstruct:
      doc["alpha"] = 1.0;
      doc["tau0"] = 1.0;
      doc["phi"] = kPi;
      doc["s1_min"] = -20.0;
      doc["s1_max"] = 20.0;
      doc["step"] = 1e-3;
      break;
    case RunMode::StaticCheck:
      doc["alpha"] = 1.0;
      doc["tau0"] = 1.0;
      doc["phi"] = kPi;
      doc["sigma"] = 0.25;
      doc["s1_min"] = -20.0;
      doc["s1_max"] = 20.0;
      doc["step"] = 1e-3;
      break;
    case RunMode::EvolveLinear:
      doc["alpha"] = 1.0;
      doc["v"] = 0.0;
      doc["s1_min"] = -40.0;
      doc["s1_max"] = 40.0;
      doc["n"] = 1024;
      doc["du"] = 1e-3;
      doc["n_steps"] = 1000;
      doc["record_every"] = 100;
      break;
    case RunMode::EvolveCnlse:
      doc["alpha"] = 1.0;
      doc["v"] = 1.0;
      doc["s1_min"] = -40.0;
      doc["s1_max"] = 40.0;
      doc["n"] = 1024;
      doc["du"] = 1e-3;
      doc["n_steps"] = 1000;
      doc["record_every"] = 100;
      break;
    case RunMode::Equivalence:
      doc["alpha"] = 1.0;
      doc["v"] = 1.0;
      doc["s1_min"] = -40.0;
      doc["s1_max"] = 40.0;
      doc["n"] = 1024;
      doc["du"] = 1e-3;
      doc["n_steps"] = 2000;
      break;
    case RunMode::Sweep:
      doc["c2"] = 2.0;
      doc["sweep_parameter"] = "tau0";
      doc["sweep_values"] = {0.7, 1.0, 1.23};
      doc["phi"] = kPi;
      doc["s1_min"] = -20.0;
      doc["s1_max"] = 20.0;
      doc["step"] = 1e-3;
      break;
  }
  doc["output_dir"] = "out";
  return doc.dump(2) + "\n";
}

std::string version_defaults_table() {
  std::ostringstream out;
  out << "defaults\n"
      << "  rod modes:    phi = pi, tau0 = 0, sigma = 0.25, s1 in [-20, 20], step = 1e-3\n"
      << "  evolve modes: v = 0, s1 in [-40, 40], n = 1024, du = 1e-3, "
         "n_steps = 1000, record_every = 100\n"
      << "  alpha = 1 when neither alpha nor c2 is given; c2 = alpha + tau0^2\n"
      << "tolerances\n"
      << "  frame orthonormality        " << format_double(rod::kFrameTol) << "\n"
      << "  torsion curvature floor     " << format_double(rod::kTorsionKFloor) << "\n"
      << "  parameter consistency       " << format_double(kirchhoff::kParamTol) << "\n"
      << "  boundary leak warn level    " << format_double(quantum::kLeakWarnLevel) << "\n"
      << "  initial edge level          " << format_double(quantum::kInitialEdgeLevel) << "\n"
      << "  moment edge leak fraction   " << format_double(analysis::kEdgeLeakFraction) << "\n";
  return out.str();
}

void write_frame_path_csv(const fs::path& file, const rod::FramePath& path) {
  std::ostringstream out;
  out << "s1,x,y,z,d1x,d1y,d1z,d2x,d2y,d2z,d3x,d3y,d3z\n";
  for (std::size_t i = 0; i < path.size(); ++i) {
    const rod::Frame& f = path.frames[i];
    out << format_double(path.s1[i]);
    for (const auto* vec : {&f.position, &f.d1, &f.d2, &f.d3})
      for (int c = 0; c < 3; ++c) out << ',' << format_double((*vec)[c]);
    out << '\n';
  }
  write_text_file(file, out.str());
}

void run(const RunConfig& config) {
  fs::create_directories(config.output_dir);
  switch (config.mode) {
    case RunMode::Reconstruct: run_reconstruct(config); return;
    case RunMode::StaticCheck: run_static_check(config); return;
    case RunMode::EvolveLinear:
    case RunMode::EvolveCnlse: run_evolve(config); return;
    case RunMode::Equivalence: run_equivalence(config); return;
    case RunMode::Sweep: run_sweep(config); return;
  }
  throw std::logic_error("unreachable mode");
}

}  // namespace conformon::io
