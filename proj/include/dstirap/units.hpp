#pragma once

// Dimensionless unit system and the shared run configuration.
//
//   hbar = 1
//   energy    in units of the recoil frequency  w_r = hbar k^2 / 2M
//   time      in units of 1 / w_r
//   momentum  in units of hbar k
//
// In these units the gauge-transformed Hamiltonian has the diagonal
// (2q, -(1 + detuning), -2q).

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace dstirap {

/// Raised for any parameter record that violates an invariant.
class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct Tolerances {
  double rtol = 1e-12;      ///< integrator relative tolerance
  double atol = 1e-13;      ///< integrator absolute tolerance
  double norm_tol = 1e-9;   ///< allowed |<psi|psi> - 1| at any sample
  double root_tol = 1e-12;  ///< crossing-time root finder, absolute in t
};

struct TimeSpan {
  double start = 0.0;
  double end = 0.0;
  double length() const { return end - start; }
};

struct SimulationConfig {
  double q = 0.0;            ///< momentum projection p0 / (hbar k)
  double omega0 = 10.0;      ///< peak Rabi frequency
  double pulse_width = 10.0; ///< Gaussian width T
  double delay = 10.0;       ///< tau; pump centred at +tau, Stokes at -tau
  double detuning = 0.0;     ///< one-photon detuning, shifts E_r -> E_r + detuning
  std::optional<double> t_start; ///< empty -> default_time_span()
  std::optional<double> t_end;
  Tolerances tolerances;

  /// Energy of |2> measured downwards from the two-photon line: 1 + detuning.
  double recoil_shift() const { return 1.0 + detuning; }
};

/// Window reaching 4 pulse widths past the farther pulse centre.
TimeSpan default_time_span(double pulse_width, double delay);

/// Resolved integration window; each missing end comes from the default.
TimeSpan time_window(const SimulationConfig& config);

/// Returns the config unchanged or throws ConfigError naming the first
/// violated invariant.
const SimulationConfig& validate(const SimulationConfig& config);

/// q = M v cos(angle) / (hbar k). Throws ConfigError for nonpositive
/// wavenumber, mass or hbar.
double momentum_from_geometry(double speed, double angle, double wavenumber,
                              double mass, double hbar);

// Flat key/value config files.  One `key = value` per line, `#` starts a
// comment.  Recognised keys: q omega0 pulse_width delay detuning t_start
// t_end rtol norm_tol.

/// Applies a single key/value assignment. Throws ConfigError for unknown
/// keys or malformed numbers.
void apply_setting(SimulationConfig& config, std::string_view key,
                   std::string_view value);

/// Parses a whole config text on top of the defaults. Does not validate.
SimulationConfig parse_config(std::istream& in);
SimulationConfig load_config(const std::string& path);

/// `key=value` lines for every resolved parameter, used in provenance headers.
std::string describe(const SimulationConfig& config);

} // namespace dstirap
