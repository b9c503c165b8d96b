#include "dstirap/csv.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace dstirap {

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

namespace {

void provenance(std::ostream& out, const char* kind, const SimulationConfig& config) {
  out << "# dstirap " << kind << '\n';
  std::istringstream lines(describe(config));
  for (std::string line; std::getline(lines, line);)
    out << "# " << line << '\n';
}

template <typename... Values>
void row(std::ostream& out, double first, Values... rest) {
  out << format_number(first);
  ((out << ',' << format_number(rest)), ...);
  out << '\n';
}

} // namespace

void write_trajectory_csv(std::ostream& out, const SimulationConfig& config,
                          const Trajectory& trajectory) {
  if (trajectory.basis != BasisTag::Bare)
    throw std::invalid_argument("trajectory export needs a bare-basis trajectory");
  if (trajectory.theta.size() != trajectory.size() ||
      trajectory.omega_eff.size() != trajectory.size())
    throw std::invalid_argument("trajectory is not annotated with theta/omega_eff");
  provenance(out, "trajectory", config);
  out << "t,P1,P2,P3,theta,omega_eff,PD,PB\n";
  for (std::size_t i = 0; i < trajectory.size(); ++i) {
    const QuantumState psi{trajectory.states[i], BasisTag::Bare};
    const auto p = populations(psi);
    const Eigen::Vector3cd db = decompose_dark_bright(psi, trajectory.theta[i]);
    row(out, trajectory.times[i], p[0], p[1], p[2], trajectory.theta[i],
        trajectory.omega_eff[i], std::norm(db[0]), std::norm(db[2]));
  }
}

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
  const SweepSpec& spec = result.spec;
  provenance(out, "sweep", spec.base);
  out << "# parameter=" << to_string(spec.parameter) << '\n';
  out << "# grid_first=" << format_number(spec.grid.front()) << '\n';
  out << "# grid_last=" << format_number(spec.grid.back()) << '\n';
  out << "# grid_points=" << spec.grid.size() << '\n';
  out << "# samples=" << spec.samples << '\n';
  for (const auto& note : spec.notes)
    out << "# note=" << note << '\n';
  out << "param,P1,P2,P3,maxP2,kick\n";
  for (const SweepRow& r : result.rows)
    row(out, r.value, r.final[0], r.final[1], r.final[2], r.max_p2, r.kick);
}

void write_report_csv(std::ostream& out, const SimulationConfig& config,
                      const DiagnosticsReport& report) {
  provenance(out, "diagnostics", config);
  out << "t,theta,omega_eff,adiabaticity,gap,decoupling,large_area,sufficient,"
         "side_condition\n";
  for (std::size_t i = 0; i < report.times.size(); ++i) {
    row(out, report.times[i], report.theta[i], report.omega_eff[i],
        report.adiabaticity[i], report.gap[i], report.decoupling[i],
        report.large_area[i], report.sufficient[i],
        report.side_condition[i] ? 1.0 : 0.0);
  }
  out << "# summary\n";
  for (const ConditionSummary& c : report.summaries())
    out << "# " << c.name << ".worst=" << format_number(c.worst) << '\n'
        << "# " << c.name << ".satisfied=" << (c.satisfied ? 1 : 0) << '\n';
  out << "# adiabatic_return.margin=" << format_number(report.adiabatic_return_margin)
      << '\n';
  out << "# side_condition.satisfied=" << (report.side_condition_met ? 1 : 0) << '\n';
  out << "# crossings=";
  for (std::size_t i = 0; i < report.crossings.size(); ++i)
    out << (i ? ";" : "") << format_number(report.crossings[i]);
  out << '\n';
}

} // namespace dstirap
