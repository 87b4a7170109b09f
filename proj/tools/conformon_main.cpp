#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"

#include "conformon/io_cli.hpp"

namespace fs = std::filesystem;
using conformon::io::RunMode;

namespace {

struct CliState {
  std::string config_path;
  std::string out_dir;
  bool seed_demo = false;
  std::optional<fs::path> resolved_out;
};

void run_mode(RunMode mode, CliState& state) {
  if (state.seed_demo) {
    if (fs::exists(state.config_path))
      throw std::runtime_error("refusing to overwrite existing config " +
                               state.config_path);
    std::ofstream out(state.config_path, std::ios::binary);
    if (!out)
      throw std::runtime_error("cannot write config file " + state.config_path);
    out << conformon::io::default_config_json(mode);
    std::cout << "wrote demo config to " << state.config_path << "\n";
    return;
  }

  std::ifstream in(state.config_path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read config file " + state.config_path);
  std::string text{std::istreambuf_iterator<char>(in),
                   std::istreambuf_iterator<char>()};

  conformon::io::RunConfig config = conformon::io::parse_config(text, mode);
  if (!state.out_dir.empty()) config.output_dir = state.out_dir;
  state.resolved_out = config.output_dir;
  conformon::io::run(config);
  std::cout << "wrote " << config.output_dir.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rod conformations and quantum transport on curved polymers",
               "conformon"};
  app.set_version_flag("--version", [] {
    return "conformon 1.0.0\n" + conformon::io::version_defaults_table();
  });
  app.require_subcommand(1);

  CliState state;
  const std::pair<RunMode, const char*> modes[] = {
      {RunMode::Reconstruct, "integrate the material frame and emit the 3D conformation"},
      {RunMode::StaticCheck, "evaluate the six static equilibrium residuals on the closed form"},
      {RunMode::EvolveLinear, "split-step evolution in the curvature-induced potential"},
      {RunMode::EvolveCnlse, "split-step evolution of the cubic equation"},
      {RunMode::Equivalence, "terminal fidelity between the linear and cubic runs"},
      {RunMode::Sweep, "one-parameter family of conformations"},
  };
  for (const auto& [mode, description] : modes) {
    CLI::App* sub = app.add_subcommand(conformon::io::to_string(mode), description);
    sub->add_option("--config", state.config_path, "JSON config file")->required();
    sub->add_option("--out", state.out_dir, "output directory (overrides the config)");
    sub->add_flag("--seed-demo", state.seed_demo,
                  "write a demo config to --config and exit");
    sub->callback([mode = mode, &state] { run_mode(mode, state); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    const nlohmann::ordered_json record{{"error", e.what()}};
    std::cerr << record.dump() << "\n";
    std::optional<fs::path> err_dir = state.resolved_out;
    if (!err_dir && !state.out_dir.empty()) err_dir = fs::path(state.out_dir);
    if (err_dir) {
      std::error_code ec;
      fs::create_directories(*err_dir, ec);
      std::ofstream out(*err_dir / "error.json", std::ios::binary);
      if (out) out << record.dump(2) << "\n";
    }
    return 1;
  }
  return 0;
}
