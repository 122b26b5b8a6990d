#include "dfsion/cli/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <fmt/format.h>

#include "dfsion/core/errors.hpp"
#include "dfsion/gates.hpp"

namespace dfsion::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_plain(std::string_view text) {
  text = trim(text);
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ConfigError(fmt::format("'{}' is not a number", text));
  }
  return value;
}

template <typename Int>
Int parse_int(std::string_view text) {
  text = trim(text);
  Int value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ConfigError(fmt::format("'{}' is not an integer", text));
  }
  return value;
}

std::vector<double> parse_list(std::string_view text) {
  std::vector<double> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    out.push_back(parse_real(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (out.empty()) throw ConfigError("empty list");
  return out;
}

std::string num(double v) { return fmt::format("{:.15g}", v); }

double to_rad_per_s(double v, FrequencyUnit unit) {
  return unit == FrequencyUnit::Hertz ? 2.0 * std::numbers::pi * v : v;
}

bool is_sweep_param(std::string_view p) {
  return p == "rabi" || p == "eta" || p == "trap_freq" || p == "detuning" || p == "fock_n";
}

}  // namespace

double parse_real(std::string_view text) {
  text = trim(text);
  const auto pi_at = text.find("pi");
  if (pi_at == std::string_view::npos) return parse_plain(text);
  const auto coeff = trim(text.substr(0, pi_at));
  double value = std::numbers::pi * (coeff.empty() ? 1.0 : coeff == "-" ? -1.0 : parse_plain(coeff));
  auto rest = trim(text.substr(pi_at + 2));
  if (!rest.empty()) {
    if (rest.front() != '/') throw ConfigError(fmt::format("'{}' is not a number", text));
    const double denom = parse_plain(rest.substr(1));
    if (denom == 0.0) throw ConfigError("division by zero");
    value /= denom;
  }
  return value;
}

std::vector<double> Sweep::values() const {
  std::vector<double> out;
  for (int i = 0; i < steps; ++i) {
    out.push_back(steps == 1 ? min : min + (max - min) * i / (steps - 1));
  }
  return out;
}

RunConfig::RunConfig() : cnot_theta(gates::kCnotTheta) {}

dynamics::TrapParams RunConfig::trap() const {
  try {
    return dynamics::TrapParams(to_rad_per_s(rabi, frequency_unit), eta, to_rad_per_s(trap_freq, frequency_unit),
                                to_rad_per_s(detuning, frequency_unit), fock_n);
  } catch (const ParameterError& e) {
    throw ConfigError(fmt::format("invalid trap parameters: {}", e.what()));
  }
}

dynamics::TrapParams RunConfig::trap_with(const std::string& param, double value) const {
  RunConfig c = *this;
  if (param == "rabi") {
    c.rabi = value;
  } else if (param == "eta") {
    c.eta = value;
  } else if (param == "trap_freq") {
    c.trap_freq = value;
  } else if (param == "detuning") {
    c.detuning = value;
  } else if (param == "fock_n") {
    c.fock_n = static_cast<int>(std::lround(value));
  } else {
    throw ConfigError(fmt::format("cannot sweep '{}'", param));
  }
  return c.trap();
}

void RunConfig::validate() const {
  trap();
  if (sweep) {
    if (!is_sweep_param(sweep->param)) throw ConfigError(fmt::format("unknown sweep_param '{}'", sweep->param));
    if (sweep->steps < 1) throw ConfigError("sweep_steps must be >= 1");
    for (double v : sweep->values()) trap_with(sweep->param, v);
  }
  if (!(horizon_cycles > 0.0)) throw ConfigError("horizon_cycles must be positive");
  if (!std::isfinite(cnot_theta)) throw ConfigError("cnot_theta must be finite");
  if (theta_steps < 1) throw ConfigError("theta_steps must be >= 1");
  if (!(shuttle_latency >= 0.0)) throw ConfigError("shuttle_latency must be >= 0");
  if (samples < 1) throw ConfigError("samples must be >= 1");
  for (double s : sigmas) {
    if (!(s >= 0.0) || !std::isfinite(s)) throw ConfigError("sigma values must be finite and >= 0");
  }
}

std::vector<std::pair<std::string, std::string>> RunConfig::resolved() const {
  std::vector<std::pair<std::string, std::string>> out = {
      {"preset", preset},
      {"frequency_unit", frequency_unit == FrequencyUnit::Hertz ? "Hz" : "rad/s"},
      {"rabi", num(rabi)},
      {"eta", num(eta)},
      {"trap_freq", num(trap_freq)},
      {"detuning", num(detuning)},
      {"fock_n", std::to_string(fock_n)},
      {"horizon_cycles", num(horizon_cycles)},
      {"cnot_theta", num(cnot_theta)},
      {"theta_steps", std::to_string(theta_steps)},
      {"shuttle_latency", num(shuttle_latency)},
      {"paper_table", paper_table ? "true" : "false"},
      {"samples", std::to_string(samples)},
      {"noise_mode", noise_mode == noise::DephaseMode::Collective ? "collective" : "independent"},
      {"input_phase", num(input_phase)},
      {"seed", std::to_string(seed)},
  };
  std::string sig;
  for (std::size_t i = 0; i < sigmas.size(); ++i) sig += (i ? "," : "") + num(sigmas[i]);
  out.emplace_back("sigmas", sig);
  if (sweep) {
    out.emplace_back("sweep_param", sweep->param);
    out.emplace_back("sweep_min", num(sweep->min));
    out.emplace_back("sweep_max", num(sweep->max));
    out.emplace_back("sweep_steps", std::to_string(sweep->steps));
  }
  return out;
}

RunConfig paper_preset() {
  RunConfig c;
  c.preset = "paper";
  c.frequency_unit = FrequencyUnit::Hertz;
  c.rabi = 5e5;
  c.trap_freq = 10.0 * c.rabi;
  c.detuning = c.trap_freq;
  c.eta = 0.23 / std::sqrt(4.0);
  c.fock_n = 0;
  return c;
}

RunConfig preset_by_name(std::string_view name) {
  if (name == "paper") return paper_preset();
  if (name == "default") return RunConfig{};
  throw ConfigError(fmt::format("unknown preset '{}'", name));
}

void set_key(RunConfig& c, std::string_view key, std::string_view raw) {
  const auto value = trim(raw);
  auto sweep = [&]() -> Sweep& {
    if (!c.sweep) c.sweep = Sweep{"fock_n", 0.0, 0.0, 1};
    return *c.sweep;
  };
  if (key == "preset") {
    throw ConfigError("preset can only be chosen with --preset");
  } else if (key == "frequency_unit") {
    if (value == "Hz" || value == "hz") {
      c.frequency_unit = FrequencyUnit::Hertz;
    } else if (value == "rad/s") {
      c.frequency_unit = FrequencyUnit::RadPerSecond;
    } else {
      throw ConfigError(fmt::format("frequency_unit must be Hz or rad/s, got '{}'", value));
    }
  } else if (key == "rabi") {
    c.rabi = parse_real(value);
  } else if (key == "eta") {
    c.eta = parse_real(value);
  } else if (key == "trap_freq") {
    c.trap_freq = parse_real(value);
  } else if (key == "detuning") {
    c.detuning = parse_real(value);
  } else if (key == "fock_n") {
    c.fock_n = parse_int<int>(value);
  } else if (key == "sweep_param") {
    sweep().param = std::string(value);
  } else if (key == "sweep_min") {
    sweep().min = parse_real(value);
  } else if (key == "sweep_max") {
    sweep().max = parse_real(value);
  } else if (key == "sweep_steps") {
    sweep().steps = parse_int<int>(value);
  } else if (key == "horizon_cycles") {
    c.horizon_cycles = parse_real(value);
  } else if (key == "cnot_theta") {
    c.cnot_theta = parse_real(value);
  } else if (key == "theta_steps") {
    c.theta_steps = parse_int<int>(value);
  } else if (key == "shuttle_latency") {
    c.shuttle_latency = parse_real(value);
  } else if (key == "paper_table") {
    if (value != "true" && value != "false") throw ConfigError("paper_table must be true or false");
    c.paper_table = value == "true";
  } else if (key == "sigmas") {
    c.sigmas = parse_list(value);
  } else if (key == "samples") {
    c.samples = parse_int<std::size_t>(value);
  } else if (key == "noise_mode") {
    if (value == "collective") {
      c.noise_mode = noise::DephaseMode::Collective;
    } else if (value == "independent") {
      c.noise_mode = noise::DephaseMode::Independent;
    } else {
      throw ConfigError(fmt::format("noise_mode must be collective or independent, got '{}'", value));
    }
  } else if (key == "input_phase") {
    c.input_phase = parse_real(value);
  } else if (key == "seed") {
    c.seed = parse_int<std::uint64_t>(value);
  } else if (key == "format") {
    if (value == "csv") {
      c.format = OutputFormat::Csv;
    } else if (value == "json") {
      c.format = OutputFormat::Json;
    } else {
      throw ConfigError(fmt::format("format must be csv or json, got '{}'", value));
    }
  } else if (key == "out") {
    c.out_path = std::string(value);
  } else {
    throw ConfigError(fmt::format("unknown key '{}'", key));
  }
}

void apply_config_text(RunConfig& config, std::string_view text) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(fmt::format("line {}: expected 'key = value'", line_no));
    const auto key = trim(line.substr(0, eq));
    if (key.empty()) throw ConfigError(fmt::format("line {}: missing key", line_no));
    try {
      set_key(config, key, line.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError(fmt::format("line {}: {}", line_no, e.what()));
    }
  }
}

void apply_config_file(RunConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("cannot open config file '{}'", path));
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    apply_config_text(config, buffer.str());
  } catch (const ConfigError& e) {
    throw ConfigError(fmt::format("{}: {}", path, e.what()));
  }
}

void apply_override(RunConfig& config, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) throw ConfigError(fmt::format("override '{}' must be key=value", assignment));
  set_key(config, trim(assignment.substr(0, eq)), assignment.substr(eq + 1));
}

}  // namespace dfsion::cli
