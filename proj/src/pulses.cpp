#include "dstirap/pulses.hpp"

#include <cmath>

namespace dstirap {

namespace {

constexpr double kEnvelopeFloor = 1e-30;

double gaussian(double t, double centre, double width) {
  const double x = (t - centre) / width;
  return std::exp(-x * x);
}

} // namespace

double pump_envelope(double t, const PulsePair& p) {
  return p.omega0 * gaussian(t, p.delay, p.pulse_width);
}

double stokes_envelope(double t, const PulsePair& p) {
  return p.omega0 * gaussian(t, -p.delay, p.pulse_width);
}

double mixing_angle(double omega_p, double omega_s) {
  return std::atan2(omega_p, omega_s);
}

double mixing_angle(double t, const PulsePair& p) {
  const double pump = pump_envelope(t, p);
  const double stokes = stokes_envelope(t, p);
  const double floor = kEnvelopeFloor * p.omega0;
  if (pump > floor || stokes > floor)
    return mixing_angle(pump, stokes);
  // atan(exp(x)) saturates cleanly at 0 and pi/2 for |x| large.
  const double T2 = p.pulse_width * p.pulse_width;
  return std::atan(std::exp(4.0 * p.delay * t / T2));
}

double mixing_angle_rate(double t, const PulsePair& p) {
  const double T2 = p.pulse_width * p.pulse_width;
  const double c = std::cosh(4.0 * p.delay * t / T2);
  return (2.0 * p.delay / T2) / c;
}

double effective_rabi(double omega_p, double omega_s) {
  return std::hypot(omega_p, omega_s);
}

double effective_rabi(double t, const PulsePair& p) {
  return effective_rabi(pump_envelope(t, p), stokes_envelope(t, p));
}

} // namespace dstirap
