#include "dstirap/units.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace dstirap {

namespace {

// Trailing/leading blanks.
std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view key, std::string_view text) {
  text = trim(text);
  double value = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty())
    throw ConfigError("invalid number for " + std::string(key) + ": '" +
                      std::string(text) + "'");
  return value;
}

void require(bool ok, const char* message) {
  if (!ok)
    throw ConfigError(message);
}

} // namespace

TimeSpan default_time_span(double pulse_width, double delay) {
  const double half = std::abs(delay) + 4.0 * pulse_width;
  return {-half, half};
}

TimeSpan time_window(const SimulationConfig& config) {
  TimeSpan span = default_time_span(config.pulse_width, config.delay);
  if (config.t_start)
    span.start = *config.t_start;
  if (config.t_end)
    span.end = *config.t_end;
  return span;
}

const SimulationConfig& validate(const SimulationConfig& config) {
  require(std::isfinite(config.q), "q must be finite");
  require(std::isfinite(config.omega0) && config.omega0 >= 0.0,
          "omega0 must be finite and non-negative");
  require(std::isfinite(config.pulse_width) && config.pulse_width > 0.0,
          "pulse_width must be positive");
  require(std::isfinite(config.delay), "delay must be finite");
  require(std::isfinite(config.detuning), "detuning must be finite");
  const TimeSpan span = time_window(config);
  require(std::isfinite(span.start) && std::isfinite(span.end),
          "t_start and t_end must be finite");
  require(span.start < span.end, "t_start < t_end is required");
  const auto& tol = config.tolerances;
  require(tol.rtol > 0.0, "rtol must be positive");
  require(tol.atol > 0.0, "atol must be positive");
  require(tol.norm_tol > 0.0, "norm_tol must be positive");
  require(tol.root_tol > 0.0, "root_tol must be positive");
  return config;
}

double momentum_from_geometry(double speed, double angle, double wavenumber,
                              double mass, double hbar) {
  require(wavenumber > 0.0, "wavenumber must be positive");
  require(mass > 0.0, "mass must be positive");
  require(hbar > 0.0, "hbar must be positive");
  return mass * speed * std::cos(angle) / (hbar * wavenumber);
}

void apply_setting(SimulationConfig& config, std::string_view key,
                   std::string_view value) {
  key = trim(key);
  const double x = parse_number(key, value);
  if (key == "q")
    config.q = x;
  else if (key == "omega0")
    config.omega0 = x;
  else if (key == "pulse_width")
    config.pulse_width = x;
  else if (key == "delay")
    config.delay = x;
  else if (key == "detuning")
    config.detuning = x;
  else if (key == "t_start")
    config.t_start = x;
  else if (key == "t_end")
    config.t_end = x;
  else if (key == "rtol")
    config.tolerances.rtol = x;
  else if (key == "norm_tol")
    config.tolerances.norm_tol = x;
  else
    throw ConfigError("unknown config key '" + std::string(key) + "'");
}

SimulationConfig parse_config(std::istream& in) {
  SimulationConfig config;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos)
      view = view.substr(0, hash);
    view = trim(view);
    if (view.empty())
      continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("line " + std::to_string(lineno) +
                        ": expected key = value");
    try {
      apply_setting(config, view.substr(0, eq), view.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return config;
}

SimulationConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot open config file '" + path + "'");
  return parse_config(in);
}

std::string describe(const SimulationConfig& config) {
  const TimeSpan span = time_window(config);
  std::ostringstream out;
  out.precision(9);
  out << "q=" << config.q << '\n'
      << "omega0=" << config.omega0 << '\n'
      << "pulse_width=" << config.pulse_width << '\n'
      << "delay=" << config.delay << '\n'
      << "detuning=" << config.detuning << '\n'
      << "t_start=" << span.start << '\n'
      << "t_end=" << span.end << '\n'
      << "rtol=" << config.tolerances.rtol << '\n'
      << "atol=" << config.tolerances.atol << '\n'
      << "norm_tol=" << config.tolerances.norm_tol << '\n';
  return out.str();
}

} // namespace dstirap
