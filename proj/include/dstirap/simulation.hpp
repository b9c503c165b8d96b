#pragma once

// Config-level drivers: build the Hamiltonian from a SimulationConfig,
// propagate from |1>, and annotate the trajectory with theta and Weff.

#include "dstirap/propagator.hpp"
#include "dstirap/units.hpp"

namespace dstirap {

/// Full three-level run in the bare basis starting from |1>.
PropagationResult simulate(const SimulationConfig& config,
                           const PropagatorOptions& options);
PropagationResult simulate(const SimulationConfig& config);

/// Same run, propagated in the dark/bright frame with the exact
/// rotating-frame term.  The initial state is U(t_start)|1>.
PropagationResult simulate_darkbright(const SimulationConfig& config,
                                      const PropagatorOptions& options);

/// Two-level Landau-Zener reduction started in |B>.  Populations are
/// (P_B, P_2).
PropagationResult simulate_landau_zener(const SimulationConfig& config,
                                        const PropagatorOptions& options);
PropagationResult simulate_landau_zener(const SimulationConfig& config);

/// Matrix-exponential oracle for the bare three-level run.
QuantumState simulate_oracle(const SimulationConfig& config, std::size_t steps);

/// Fills theta and omega_eff for every sample time.
void annotate(Trajectory& trajectory, const SimulationConfig& config);

} // namespace dstirap
