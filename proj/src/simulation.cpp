#include "dstirap/simulation.hpp"

#include "dstirap/hamiltonian.hpp"
#include "dstirap/pulses.hpp"

namespace dstirap {

QuantumState QuantumState::ground() {
  return basis_state(BasisTag::Bare, 0);
}

QuantumState QuantumState::basis_state(BasisTag basis, Eigen::Index index) {
  const Eigen::Index dim = basis == BasisTag::LandauZener ? 2 : 3;
  if (index < 0 || index >= dim)
    throw std::out_of_range("basis index out of range");
  QuantumState psi{Eigen::VectorXcd::Zero(dim), basis};
  psi.amplitudes[index] = 1.0;
  return psi;
}

void annotate(Trajectory& trajectory, const SimulationConfig& config) {
  const PulsePair pulses = PulsePair::from(config);
  trajectory.theta.clear();
  trajectory.omega_eff.clear();
  trajectory.theta.reserve(trajectory.size());
  trajectory.omega_eff.reserve(trajectory.size());
  for (double t : trajectory.times) {
    trajectory.theta.push_back(mixing_angle(t, pulses));
    trajectory.omega_eff.push_back(effective_rabi(t, pulses));
  }
}

PropagationResult simulate(const SimulationConfig& config,
                           const PropagatorOptions& options) {
  validate(config);
  auto h = [&config](double t) { return bare_hamiltonian(t, config); };
  PropagationResult result =
      propagate(h, QuantumState::ground(), time_window(config), options);
  annotate(result.trajectory, config);
  return result;
}

PropagationResult simulate(const SimulationConfig& config) {
  return simulate(config, PropagatorOptions::from(config.tolerances));
}

PropagationResult simulate_darkbright(const SimulationConfig& config,
                                      const PropagatorOptions& options) {
  validate(config);
  const TimeSpan span = time_window(config);
  const double theta0 = mixing_angle(span.start, PulsePair::from(config));
  QuantumState psi0{basis_rotation(theta0).cast<Complex>() *
                        QuantumState::ground().amplitudes,
                    BasisTag::DarkBright};
  auto h = [&config](double t) { return darkbright_hamiltonian(t, config, true); };
  PropagationResult result = propagate(h, psi0, span, options);
  annotate(result.trajectory, config);
  return result;
}

PropagationResult simulate_landau_zener(const SimulationConfig& config,
                                        const PropagatorOptions& options) {
  validate(config);
  auto h = [&config](double t) { return lz_hamiltonian(t, config); };
  PropagationResult result =
      propagate(h, QuantumState::basis_state(BasisTag::LandauZener, 0),
                time_window(config), options);
  annotate(result.trajectory, config);
  return result;
}

PropagationResult simulate_landau_zener(const SimulationConfig& config) {
  return simulate_landau_zener(config, PropagatorOptions::from(config.tolerances));
}

QuantumState simulate_oracle(const SimulationConfig& config, std::size_t steps) {
  validate(config);
  auto h = [&config](double t) { return bare_hamiltonian(t, config); };
  return propagate_oracle(h, QuantumState::ground(), time_window(config), steps);
}

} // namespace dstirap
