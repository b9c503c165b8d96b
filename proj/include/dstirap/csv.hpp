#pragma once

// CSV writers.  Every file opens with a `#`-prefixed provenance block
// holding the resolved configuration; numbers use 9 significant digits.

#include <iosfwd>
#include <string>

#include "dstirap/analysis.hpp"
#include "dstirap/propagator.hpp"
#include "dstirap/sweeps.hpp"
#include "dstirap/units.hpp"

namespace dstirap {

/// %.9g
std::string format_number(double x);

/// Columns t,P1,P2,P3,theta,omega_eff,PD,PB.  The trajectory must be a
/// bare-basis run annotated with theta and omega_eff.
void write_trajectory_csv(std::ostream& out, const SimulationConfig& config,
                          const Trajectory& trajectory);

/// Columns param,P1,P2,P3,maxP2,kick.
void write_sweep_csv(std::ostream& out, const SweepResult& result);

/// One row per sample followed by a `#` summary block.
void write_report_csv(std::ostream& out, const SimulationConfig& config,
                      const DiagnosticsReport& report);

} // namespace dstirap
