#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "conformon/numeric.hpp"
#include "conformon/rod_geometry.hpp"

namespace conformon::io {

enum class RunMode {
  Reconstruct,
  StaticCheck,
  EvolveLinear,
  EvolveCnlse,
  Equivalence,
  Sweep,
};

std::string to_string(RunMode mode);
RunMode mode_from_string(const std::string& name);

// Fully resolved run parameters. Defaults are mode dependent and applied by
// parse_config; see default_config_json for the per-mode starting points.
struct RunConfig {
  RunMode mode = RunMode::Reconstruct;

  double alpha = 1.0;
  double c2 = 1.0;
  double tau0 = 0.0;
  double phi = kPi;
  double sigma = 0.25;
  bool allow_zero_alpha = false;

  double v = 0.0;
  std::optional<double> potential_velocity;

  double s1_min = -20.0;
  double s1_max = 20.0;
  double step = 1e-3;

  std::size_t n = 1024;
  double du = 1e-3;
  std::size_t n_steps = 1000;
  std::size_t record_every = 100;

  std::string sweep_parameter;
  std::vector<double> sweep_values;

  std::filesystem::path output_dir = "out";
};

// Parses a flat JSON object. Strict: keys outside the active mode's set are
// rejected, and alpha/C2/tau0 must be mutually consistent. A mode passed by
// the caller (CLI subcommand) must agree with any mode key in the document.
RunConfig parse_config(const std::string& text,
                       std::optional<RunMode> mode_override = {});

// Demo configuration for a mode, as a JSON document.
std::string default_config_json(RunMode mode);

// Human-readable table of defaults and tolerance constants.
std::string version_defaults_table();

// Executes the run, writing all artifacts plus manifest.json into
// config.output_dir. Throws on failure.
void run(const RunConfig& config);

// %.17g, round-trip exact for doubles.
std::string format_double(double x);

void write_frame_path_csv(const std::filesystem::path& file,
                          const rod::FramePath& path);

}  // namespace conformon::io
