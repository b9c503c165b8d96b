#pragma once

// One-dimensional parameter scans over delay, pulse area or momentum.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dstirap/analysis.hpp"
#include "dstirap/propagator.hpp"
#include "dstirap/units.hpp"

namespace dstirap {

enum class SweepParameter {
  Delay,    ///< tau, in units of 1/w_r
  Area,     ///< omega0 * T, with omega0 = area / T
  Momentum, ///< q
};

const char* to_string(SweepParameter parameter);
SweepParameter parse_sweep_parameter(const std::string& name);

struct SweepSpec {
  SimulationConfig base;
  SweepParameter parameter = SweepParameter::Delay;
  std::vector<double> grid;    ///< strictly monotone, non-empty
  std::size_t samples = 1025;  ///< trajectory grid used for max P2
  unsigned threads = 0;        ///< 0: hardware concurrency
  std::vector<std::string> notes; ///< extra provenance lines
};

struct SweepRow {
  double value = 0.0;
  Populations final{};
  double max_p2 = 0.0;
  double kick = 0.0;
};

struct SweepResult {
  SweepSpec spec;
  std::vector<SweepRow> rows;
};

/// A point of the scan failed to integrate.
class SweepError : public std::runtime_error {
public:
  SweepError(SweepParameter parameter, double value, const std::string& why);
  double value() const { return value_; }

private:
  double value_;
};

/// Config of a single grid point, validated.
SimulationConfig sweep_point(const SweepSpec& spec, double value);

/// Runs one propagation per grid value from |1>; rows come back in grid
/// order.  The first failing point (in grid order) aborts with SweepError.
SweepResult run_sweep(const SweepSpec& spec);

SweepResult sweep_delay(const SweepSpec& spec);
SweepResult sweep_area(const SweepSpec& spec);
SweepResult sweep_momentum(const SweepSpec& spec);

/// n points from first to last inclusive.
std::vector<double> linspace(double first, double last, std::size_t n);

/// tau/T in [-2, 2], 81 points.
std::vector<double> default_delay_grid(double pulse_width);
/// omega0 T in [0, 200], 51 points.
std::vector<double> default_area_grid();
/// q in [0.1, 10], 100 points.
std::vector<double> default_momentum_grid();

enum class Observable { P1, P2, P3, MaxP2, Kick };

/// First grid interval where the observable crosses `level`, linearly
/// interpolated.  Empty if it never does.
std::optional<double> level_crossing(const SweepResult& result,
                                     Observable observable, double level);

} // namespace dstirap
