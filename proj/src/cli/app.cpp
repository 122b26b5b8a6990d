#include "dfsion/cli/app.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "dfsion/cli/commands.hpp"
#include "dfsion/cli/config.hpp"
#include "dfsion/cli/report.hpp"

namespace dfsion::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pair-encoded trapped-ion logic: gate, teleportation, effective-Rabi and dephasing checks", "dfsion"};
  app.require_subcommand(1);

  std::string config_path;
  std::string preset;
  std::string format;
  std::string out_path;
  std::optional<std::uint64_t> seed;
  bool paper_table = false;
  std::vector<std::string> overrides;

  app.add_option("--config", config_path, "Flat key = value config file");
  app.add_option("--preset", preset, "Parameter preset")->check(CLI::IsMember({"default", "paper"}));
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", out_path, "Write the report here instead of stdout");
  app.add_option("--seed", seed, "Seed for every stochastic step");
  app.add_option("--set", overrides, "Override one config key (KEY=VALUE, repeatable)");

  using Command = std::function<CommandResult(const RunConfig&)>;
  const std::map<std::string, std::pair<std::string, Command>> commands = {
      {"cnot-verify", {"Compose the CNOT pulse sequence and check it against the truth table", cmd_cnot_verify}},
      {"teleport", {"Run the teleportation protocol over a grid of input phases", cmd_teleport}},
      {"rabi", {"Compare the effective Rabi frequency with the four-level ladder oracle", cmd_rabi}},
      {"timing", {"Gate and Bell-pulse durations", cmd_timing}},
      {"dephase", {"Ensemble dephasing fidelity of encoded and bare qubits", cmd_dephase}},
  };
  std::map<CLI::App*, const Command*> handlers;
  for (const auto& [name, entry] : commands) {
    auto* sub = app.add_subcommand(name, entry.first);
    sub->fallthrough();
    if (name == "teleport") sub->add_flag("--paper-table", paper_table, "Use the correction table as printed");
    handlers[sub] = &entry.second;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitConfig;
  }

  CLI::App* chosen = app.get_subcommands().front();
  RunConfig config;
  try {
    if (!preset.empty()) config = preset_by_name(preset);
    if (!config_path.empty()) apply_config_file(config, config_path);
    for (const auto& o : overrides) apply_override(config, o);
    if (seed) config.seed = *seed;
    if (!format.empty()) set_key(config, "format", format);
    if (!out_path.empty()) config.out_path = out_path;
    if (paper_table) config.paper_table = true;
    config.validate();
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  CommandResult result;
  try {
    result = (*handlers.at(chosen))(config);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  auto write = [&](std::ostream& sink) {
    if (config.format == OutputFormat::Json) {
      write_json(result.report, sink);
    } else {
      write_csv(result.report, sink);
    }
  };
  if (config.out_path.empty()) {
    write(out);
  } else {
    std::ofstream file(config.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << config.out_path << "'\n";
      return kExitConfig;
    }
    write(file);
  }
  err << result.headline << "\n";
  return result.exit_code;
}

}  // namespace dfsion::cli
