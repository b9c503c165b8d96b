#pragma once

// Observables and adiabaticity diagnostics.

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "dstirap/propagator.hpp"
#include "dstirap/units.hpp"

namespace dstirap {

/// No Landau-Zener crossing between |B> and |2>: either 2q <= 1 + detuning
/// or the crossing time lies outside the integration window.
class NoCrossing : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

using Populations = std::array<double, 3>;

/// (P1, P2, P3) of a bare-basis state.  Throws std::invalid_argument for any
/// other basis.
Populations populations(const QuantumState& psi);

/// (<D|psi>, <2|psi>, <B|psi>) with |D> = cos th|1> - sin th|3> and
/// |B> = sin th|1> + cos th|3>.
Eigen::Vector3cd decompose_dark_bright(const QuantumState& psi, double theta);

/// Inverse of decompose_dark_bright.
QuantumState recompose_dark_bright(const Eigen::Vector3cd& dark_bright,
                                   double theta);

/// max_t P2(t).  Throws for empty or non-bare trajectories.
double max_intermediate_population(const Trajectory& trajectory);

/// Times in the integration window where cos 2th(t) = (1 + detuning)/(2q).
/// Throws NoCrossing when q is too small for a crossing to exist at all; an
/// empty list means the level is never reached inside the window (e.g. for
/// coincident pulses).
std::vector<double> crossing_times(const SimulationConfig& config);

/// Landau-Zener adiabatic-transfer estimate 1 - exp(-2 pi Gamma) with
/// Gamma = (Weff(t*)/2)^2 / |d/dt (1 + detuning - 2q cos 2th)| at the crossing.
double lz_transition_probability(const SimulationConfig& config);

/// Expected photon momentum transfer in units of hbar k: P2 + 2 P3.
double momentum_kick(const Populations& p);

// Condition checks.  "a << b" is taken as a/b <= kMuchLess.
inline constexpr double kMuchLess = 0.1;
// Ratios are judged only where Weff >= kInteractionFraction * omega0; in the
// far tails every ratio against Weff diverges.
inline constexpr double kInteractionFraction = 0.01;

struct ConditionSummary {
  std::string name;
  double worst = 0.0; ///< largest ratio inside the interaction region
  bool satisfied = false;
};

struct DiagnosticsReport {
  std::vector<double> times;
  std::vector<double> theta;
  std::vector<double> omega_eff;
  std::vector<double> adiabaticity; ///< |th'| / Weff
  std::vector<double> gap;          ///< delta = min_i |2q cos 2th - mu_i|
  std::vector<double> decoupling;   ///< |2q sin 2th| / delta
  std::vector<double> large_area;   ///< |2q sin 2th| / Weff
  std::vector<double> sufficient;   ///< max(1/T, |2q sin 2th|) / Weff
  std::vector<bool> side_condition; ///< min mu < 2q cos 2th < max mu

  double adiabatic_return_margin = 0.0; ///< (1 + detuning) T
  std::vector<double> crossings;

  ConditionSummary adiabatic;
  ConditionSummary decoupled;
  ConditionSummary strong_field;
  ConditionSummary combined;
  ConditionSummary adiabatic_return;
  bool side_condition_met = false; ///< throughout the interaction region

  std::vector<ConditionSummary> summaries() const {
    return {adiabatic, decoupled, strong_field, combined, adiabatic_return};
  }
};

DiagnosticsReport adiabaticity_report(const SimulationConfig& config,
                                      std::size_t samples = 1025);

} // namespace dstirap
