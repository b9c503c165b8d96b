#include "dstirap/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/tools/toms748_solve.hpp>

#include "dstirap/hamiltonian.hpp"
#include "dstirap/pulses.hpp"

namespace dstirap {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double ratio(double num, double den) {
  if (num == 0.0)
    return 0.0;
  return den > 0.0 ? num / den : kInf;
}

void require_bare(const QuantumState& psi) {
  if (psi.basis != BasisTag::Bare || psi.dimension() != 3)
    throw std::invalid_argument(std::string("expected a bare-basis state, got ") +
                                to_string(psi.basis));
}

// cos 2th level of the |B>-|2> crossing.
double crossing_level(const SimulationConfig& config) {
  if (config.q <= 0.0)
    return kInf;
  return config.recoil_shift() / (2.0 * config.q);
}

} // namespace

Populations populations(const QuantumState& psi) {
  require_bare(psi);
  return {std::norm(psi.amplitudes[0]), std::norm(psi.amplitudes[1]),
          std::norm(psi.amplitudes[2])};
}

Eigen::Vector3cd decompose_dark_bright(const QuantumState& psi, double theta) {
  require_bare(psi);
  return basis_rotation(theta).cast<Complex>() * psi.amplitudes;
}

QuantumState recompose_dark_bright(const Eigen::Vector3cd& dark_bright,
                                   double theta) {
  return {basis_rotation(theta).transpose().cast<Complex>() * dark_bright,
          BasisTag::Bare};
}

double max_intermediate_population(const Trajectory& trajectory) {
  if (trajectory.empty())
    throw std::invalid_argument("empty trajectory");
  if (trajectory.basis != BasisTag::Bare)
    throw std::invalid_argument("max_intermediate_population needs a bare-basis trajectory");
  double best = 0.0;
  for (const auto& p : trajectory.populations)
    best = std::max(best, p[1]);
  return best;
}

std::vector<double> crossing_times(const SimulationConfig& config) {
  validate(config);
  const double level = crossing_level(config);
  if (!(std::abs(level) < 1.0))
    throw NoCrossing("no |B>-|2> crossing: requires 2q > 1 + detuning (q=" +
                     std::to_string(config.q) + ")");

  const PulsePair pulses = PulsePair::from(config);
  const TimeSpan span = time_window(config);
  auto f = [&](double t) {
    return std::cos(2.0 * mixing_angle(t, pulses)) - level;
  };

  // theta(t) is monotone for Gaussian pairs, but a coarse scan keeps the
  // search honest for any window.
  constexpr int kScan = 2048;
  std::vector<double> roots;
  double t0 = span.start;
  double f0 = f(t0);
  if (f0 == 0.0)
    roots.push_back(t0);
  boost::math::tools::eps_tolerance<double> tol(48);
  for (int i = 1; i <= kScan; ++i) {
    const double t1 = i == kScan ? span.end : span.start + span.length() * i / kScan;
    const double f1 = f(t1);
    if (f1 == 0.0) {
      roots.push_back(t1);
    } else if (f0 != 0.0 && std::signbit(f0) != std::signbit(f1)) {
      std::uintmax_t iterations = 200;
      auto [lo, hi] = boost::math::tools::toms748_solve(f, t0, t1, f0, f1, tol, iterations);
      double root = 0.5 * (lo + hi);
      // Polish against the configured absolute tolerance.
      while (hi - lo > config.tolerances.root_tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
          break;
        (std::signbit(f(mid)) == std::signbit(f(lo)) ? lo : hi) = mid;
        root = 0.5 * (lo + hi);
      }
      roots.push_back(root);
    }
    t0 = t1;
    f0 = f1;
  }
  return roots;
}

double lz_transition_probability(const SimulationConfig& config) {
  const std::vector<double> roots = crossing_times(config);
  if (roots.empty())
    throw NoCrossing("crossing level is not reached inside the integration window");
  const double t = roots.front();
  const PulsePair pulses = PulsePair::from(config);
  const double coupling = 0.5 * effective_rabi(t, pulses);
  const double theta = mixing_angle(t, pulses);
  // d/dt (E - 2q cos 2th) = 4q sin 2th th'
  const double sweep =
      std::abs(4.0 * config.q * std::sin(2.0 * theta) * mixing_angle_rate(t, pulses));
  if (coupling == 0.0)
    return 0.0;
  if (sweep == 0.0)
    return 1.0;
  const double gamma = coupling * coupling / sweep;
  return -std::expm1(-2.0 * std::numbers::pi * gamma);
}

double momentum_kick(const Populations& p) {
  const double total = p[0] + p[1] + p[2];
  if (!(std::abs(total - 1.0) <= 1e-6))
    throw std::invalid_argument("populations do not sum to one (sum=" +
                                std::to_string(total) + ")");
  return p[1] + 2.0 * p[2];
}

DiagnosticsReport adiabaticity_report(const SimulationConfig& config,
                                      std::size_t samples) {
  validate(config);
  if (samples < 2)
    throw std::invalid_argument("need at least two samples");
  const PulsePair pulses = PulsePair::from(config);
  const TimeSpan span = time_window(config);
  const double doppler = 2.0 * config.q;
  const double recoil = config.recoil_shift();
  const double region_floor = kInteractionFraction * config.omega0;

  DiagnosticsReport r;
  r.adiabatic = {"adiabaticity", 0.0, false};
  r.decoupled = {"decoupling", 0.0, false};
  r.strong_field = {"large_area", 0.0, false};
  r.combined = {"sufficient", 0.0, false};
  bool in_region_any = false;
  bool side_ok = true;

  for (std::size_t i = 0; i < samples; ++i) {
    const double t = i + 1 == samples
                         ? span.end
                         : span.start + span.length() * static_cast<double>(i) /
                                            static_cast<double>(samples - 1);
    const double theta = mixing_angle(t, pulses);
    const double w = effective_rabi(t, pulses);
    const double rate = std::abs(mixing_angle_rate(t, pulses));
    const double dark = doppler * std::cos(2.0 * theta);
    const double leak = std::abs(doppler * std::sin(2.0 * theta));

    // Eigenvalues of the bright block [[-recoil, W/2], [W/2, -dark]].
    const double mean = -0.5 * (recoil + dark);
    const double half_split = std::hypot(0.5 * (dark - recoil), 0.5 * w);
    const double mu_lo = mean - half_split;
    const double mu_hi = mean + half_split;
    const double delta = std::min(std::abs(dark - mu_lo), std::abs(dark - mu_hi));

    r.times.push_back(t);
    r.theta.push_back(theta);
    r.omega_eff.push_back(w);
    r.adiabaticity.push_back(ratio(rate, w));
    r.gap.push_back(delta);
    r.decoupling.push_back(ratio(leak, delta));
    r.large_area.push_back(ratio(leak, w));
    r.sufficient.push_back(ratio(std::max(1.0 / config.pulse_width, leak), w));
    const bool side = mu_lo < dark && dark < mu_hi;
    r.side_condition.push_back(side);

    if (config.omega0 > 0.0 && w >= region_floor) {
      in_region_any = true;
      r.adiabatic.worst = std::max(r.adiabatic.worst, r.adiabaticity.back());
      r.decoupled.worst = std::max(r.decoupled.worst, r.decoupling.back());
      r.strong_field.worst = std::max(r.strong_field.worst, r.large_area.back());
      r.combined.worst = std::max(r.combined.worst, r.sufficient.back());
      side_ok = side_ok && side;
    }
  }

  if (!in_region_any) {
    r.adiabatic.worst = r.strong_field.worst = r.combined.worst = kInf;
    // With no field the dark state is trivially decoupled only if the
    // leak term vanishes everywhere.
    r.decoupled.worst = config.q == 0.0 ? 0.0 : kInf;
    side_ok = false;
  }
  for (ConditionSummary* c : {&r.adiabatic, &r.decoupled, &r.strong_field, &r.combined})
    c->satisfied = c->worst <= kMuchLess;

  r.adiabatic_return_margin = recoil * config.pulse_width;
  r.adiabatic_return = {"adiabatic_return", ratio(1.0, r.adiabatic_return_margin), false};
  r.adiabatic_return.satisfied = r.adiabatic_return_margin > 0.0 &&
                                 r.adiabatic_return.worst <= kMuchLess;
  r.side_condition_met = side_ok;

  try {
    r.crossings = crossing_times(config);
  } catch (const NoCrossing&) {
    r.crossings.clear();
  }
  return r;
}

} // namespace dstirap
