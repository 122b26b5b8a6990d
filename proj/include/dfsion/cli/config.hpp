#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dfsion/dynamics.hpp"
#include "dfsion/noise.hpp"

namespace dfsion::cli {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FrequencyUnit { RadPerSecond, Hertz };
enum class OutputFormat { Csv, Json };

struct Sweep {
  std::string param;  // rabi | eta | trap_freq | detuning | fock_n
  double min = 0.0;
  double max = 0.0;
  int steps = 1;

  std::vector<double> values() const;
};

// Every run is described by one RunConfig. Values are resolved in the order
// defaults, preset, config file, --set overrides, dedicated flags.
struct RunConfig {
  std::string preset = "default";
  FrequencyUnit frequency_unit = FrequencyUnit::RadPerSecond;
  // Frequencies are in `frequency_unit`; trap() converts to rad/s.
  double rabi = 1.0;
  double eta = 0.02;
  double trap_freq = 1.0;
  double detuning = 1.0;
  int fock_n = 0;
  std::optional<Sweep> sweep;
  double horizon_cycles = 1.5;

  double cnot_theta;
  int theta_steps = 8;
  double shuttle_latency = 0.0;
  bool paper_table = false;

  std::vector<double> sigmas = {0.0, 0.5, 1.0, 2.0};
  std::size_t samples = 10000;
  noise::DephaseMode noise_mode = noise::DephaseMode::Collective;
  double input_phase = 0.0;

  std::uint64_t seed = 20240917;
  OutputFormat format = OutputFormat::Csv;
  std::string out_path;

  RunConfig();

  // Trap parameters in rad/s. Throws ConfigError on invariant violations.
  dynamics::TrapParams trap() const;
  // trap() with one swept parameter replaced.
  dynamics::TrapParams trap_with(const std::string& param, double value) const;

  // Throws ConfigError on any invalid field.
  void validate() const;

  // Resolved parameters as ordered key/value strings, for report headers.
  std::vector<std::pair<std::string, std::string>> resolved() const;
};

// Ω = 2π·500 kHz, ν = 10Ω, δ = ν, η = 0.23/sqrt(4), n = 0.
RunConfig paper_preset();
RunConfig preset_by_name(std::string_view name);

// Sets one key. Throws ConfigError for unknown keys or unparsable values.
void set_key(RunConfig& config, std::string_view key, std::string_view value);

// Flat "key = value" text; '#' starts a comment. Errors carry the line number.
void apply_config_text(RunConfig& config, std::string_view text);
void apply_config_file(RunConfig& config, const std::string& path);
// "key=value"
void apply_override(RunConfig& config, std::string_view assignment);

// Accepts plain numbers and multiples of pi: "pi", "0.75pi", "3pi/4".
double parse_real(std::string_view text);

}  // namespace dfsion::cli
