#pragma once

// Gaussian pump/Stokes pair
//
//   pump(t)   = omega0 exp(-((t - tau)/T)^2)
//   stokes(t) = omega0 exp(-((t + tau)/T)^2)
//
// so tan(theta) = pump/stokes = exp(4 tau t / T^2). Positive delay puts the
// Stokes pulse first (counterintuitive order).

#include "dstirap/units.hpp"

namespace dstirap {

struct PulsePair {
  double omega0 = 0.0;
  double pulse_width = 1.0;
  double delay = 0.0;

  static PulsePair from(const SimulationConfig& config) {
    return {config.omega0, config.pulse_width, config.delay};
  }
};

double pump_envelope(double t, const PulsePair& p);
double stokes_envelope(double t, const PulsePair& p);

/// theta in [0, pi/2] with tan(theta) = omega_p / omega_s.
double mixing_angle(double omega_p, double omega_s);

/// Mixing angle along the pulse pair. Where both envelopes fall below
/// 1e-30 omega0 the analytic ratio exp(4 tau t / T^2) is used instead.
double mixing_angle(double t, const PulsePair& p);

/// d(theta)/dt = (2 tau / T^2) / cosh(4 tau t / T^2).
double mixing_angle_rate(double t, const PulsePair& p);

double effective_rabi(double omega_p, double omega_s);
double effective_rabi(double t, const PulsePair& p);

} // namespace dstirap
