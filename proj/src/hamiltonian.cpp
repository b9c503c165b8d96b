#include "dstirap/hamiltonian.hpp"

#include <cmath>

#include "dstirap/pulses.hpp"

namespace dstirap {

const char* to_string(BasisTag basis) {
  switch (basis) {
  case BasisTag::Bare:
    return "bare";
  case BasisTag::DarkBright:
    return "dark-bright";
  case BasisTag::LandauZener:
    return "landau-zener";
  }
  return "unknown";
}

HermitianMatrix3 bare_hamiltonian(double t, const SimulationConfig& config) {
  const PulsePair pulses = PulsePair::from(config);
  const double pump = pump_envelope(t, pulses);
  const double stokes = stokes_envelope(t, pulses);
  const double doppler = 2.0 * config.q;

  HermitianMatrix3 h = HermitianMatrix3::Zero();
  h(0, 0) = doppler;
  h(1, 1) = -config.recoil_shift();
  h(2, 2) = -doppler;
  h(0, 1) = h(1, 0) = 0.5 * pump;
  // Stokes couples |3> <-> |2>; the printed sigma_31 is inconsistent with the
  // bright-state coupling Weff/2 between |B> and |2>.
  h(2, 1) = h(1, 2) = 0.5 * stokes;
  return h;
}

Eigen::Matrix3d basis_rotation(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Eigen::Matrix3d u;
  u << c, 0.0, -s,
       0.0, 1.0, 0.0,
       s, 0.0, c;
  return u;
}

Eigen::Matrix3d basis_rotation_rate(double theta, double theta_rate) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Eigen::Matrix3d du;
  du << -s, 0.0, -c,
        0.0, 0.0, 0.0,
        c, 0.0, -s;
  return theta_rate * du;
}

HermitianMatrix3 rotating_frame_term(double t, const SimulationConfig& config) {
  const PulsePair pulses = PulsePair::from(config);
  const double theta = mixing_angle(t, pulses);
  const double rate = mixing_angle_rate(t, pulses);
  const Eigen::Matrix3d generator =
      basis_rotation_rate(theta, rate) * basis_rotation(theta).transpose();
  return Complex(0.0, 1.0) * generator.cast<Complex>();
}

HermitianMatrix3 darkbright_hamiltonian(double t, const SimulationConfig& config,
                                        bool include_nonadiabatic) {
  const PulsePair pulses = PulsePair::from(config);
  const double theta = mixing_angle(t, pulses);
  const double doppler = 2.0 * config.q;
  const double cos2 = std::cos(2.0 * theta);
  const double sin2 = std::sin(2.0 * theta);

  HermitianMatrix3 h = HermitianMatrix3::Zero();
  h(0, 0) = doppler * cos2;                 // H_DD
  h(0, 2) = h(2, 0) = doppler * sin2;       // H_DB
  h(1, 1) = -config.recoil_shift();         // bright block
  h(2, 2) = -doppler * cos2;
  h(1, 2) = h(2, 1) = 0.5 * effective_rabi(t, pulses);
  if (include_nonadiabatic)
    h += rotating_frame_term(t, config);
  return h;
}

HermitianMatrix2 lz_hamiltonian(double t, const SimulationConfig& config) {
  const PulsePair pulses = PulsePair::from(config);
  const double theta = mixing_angle(t, pulses);
  HermitianMatrix2 h = HermitianMatrix2::Zero();
  h(0, 0) = config.recoil_shift() - 2.0 * config.q * std::cos(2.0 * theta);
  h(0, 1) = h(1, 0) = 0.5 * effective_rabi(t, pulses);
  return h;
}

} // namespace dstirap
