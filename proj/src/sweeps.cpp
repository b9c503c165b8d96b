#include "dstirap/sweeps.hpp"

#include <atomic>
#include <exception>
#include <thread>

#include "dstirap/simulation.hpp"

namespace dstirap {

const char* to_string(SweepParameter parameter) {
  switch (parameter) {
  case SweepParameter::Delay:
    return "delay";
  case SweepParameter::Area:
    return "area";
  case SweepParameter::Momentum:
    return "momentum";
  }
  return "unknown";
}

SweepParameter parse_sweep_parameter(const std::string& name) {
  if (name == "delay")
    return SweepParameter::Delay;
  if (name == "area")
    return SweepParameter::Area;
  if (name == "momentum")
    return SweepParameter::Momentum;
  throw ConfigError("unknown sweep parameter '" + name + "'");
}

SweepError::SweepError(SweepParameter parameter, double value,
                       const std::string& why)
    : std::runtime_error(std::string("sweep over ") + to_string(parameter) +
                         " failed at " + std::to_string(value) + ": " + why),
      value_(value) {}

std::vector<double> linspace(double first, double last, std::size_t n) {
  std::vector<double> v;
  if (n == 0)
    return v;
  if (n == 1)
    return {first};
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    v.push_back(i + 1 == n ? last
                           : first + (last - first) * static_cast<double>(i) /
                                         static_cast<double>(n - 1));
  return v;
}

std::vector<double> default_delay_grid(double pulse_width) {
  std::vector<double> grid = linspace(-2.0, 2.0, 81);
  for (double& x : grid)
    x *= pulse_width;
  return grid;
}

std::vector<double> default_area_grid() { return linspace(0.0, 200.0, 51); }

std::vector<double> default_momentum_grid() { return linspace(0.1, 10.0, 100); }

namespace {

void check_spec(const SweepSpec& spec) {
  validate(spec.base);
  if (spec.grid.empty())
    throw ConfigError("sweep grid is empty");
  if (spec.grid.size() > 1) {
    const bool up = spec.grid[1] > spec.grid[0];
    for (std::size_t i = 1; i < spec.grid.size(); ++i)
      if (up ? !(spec.grid[i] > spec.grid[i - 1]) : !(spec.grid[i] < spec.grid[i - 1]))
        throw ConfigError("sweep grid must be strictly monotone");
  }
}

SweepRow evaluate(const SweepSpec& spec, double value) {
  const SimulationConfig config = sweep_point(spec, value);
  PropagatorOptions options = PropagatorOptions::from(config.tolerances);
  options.samples = spec.samples;
  const PropagationResult run = simulate(config, options);
  SweepRow row;
  row.value = value;
  row.final = populations(run.final_state);
  row.max_p2 = max_intermediate_population(run.trajectory);
  row.kick = momentum_kick(row.final);
  return row;
}

double pick(const SweepRow& row, Observable observable) {
  switch (observable) {
  case Observable::P1:
    return row.final[0];
  case Observable::P2:
    return row.final[1];
  case Observable::P3:
    return row.final[2];
  case Observable::MaxP2:
    return row.max_p2;
  case Observable::Kick:
    return row.kick;
  }
  return 0.0;
}

} // namespace

SimulationConfig sweep_point(const SweepSpec& spec, double value) {
  SimulationConfig config = spec.base;
  switch (spec.parameter) {
  case SweepParameter::Delay:
    config.delay = value;
    break;
  case SweepParameter::Area:
    config.omega0 = value / config.pulse_width;
    break;
  case SweepParameter::Momentum:
    config.q = value;
    break;
  }
  validate(config);
  return config;
}

SweepResult run_sweep(const SweepSpec& spec) {
  check_spec(spec);
  const std::size_t n = spec.grid.size();
  std::vector<SweepRow> rows(n);
  std::vector<std::exception_ptr> errors(n);

  unsigned workers = spec.threads ? spec.threads : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n)));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        rows[i] = evaluate(spec, spec.grid[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back(work);
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (!errors[i])
      continue;
    try {
      std::rethrow_exception(errors[i]);
    } catch (const std::exception& e) {
      throw SweepError(spec.parameter, spec.grid[i], e.what());
    }
  }
  return {spec, std::move(rows)};
}

namespace {

SweepResult run_checked(const SweepSpec& spec, SweepParameter expected) {
  if (spec.parameter != expected)
    throw ConfigError(std::string("expected a sweep over ") + to_string(expected) +
                      ", got " + to_string(spec.parameter));
  return run_sweep(spec);
}

} // namespace

SweepResult sweep_delay(const SweepSpec& spec) {
  return run_checked(spec, SweepParameter::Delay);
}

SweepResult sweep_area(const SweepSpec& spec) {
  return run_checked(spec, SweepParameter::Area);
}

SweepResult sweep_momentum(const SweepSpec& spec) {
  return run_checked(spec, SweepParameter::Momentum);
}

std::optional<double> level_crossing(const SweepResult& result,
                                     Observable observable, double level) {
  const auto& rows = result.rows;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double a = pick(rows[i - 1], observable) - level;
    const double b = pick(rows[i], observable) - level;
    if (a == 0.0)
      return rows[i - 1].value;
    if ((a < 0.0) != (b < 0.0)) {
      const double w = a / (a - b);
      return rows[i - 1].value + w * (rows[i].value - rows[i - 1].value);
    }
  }
  if (!rows.empty() && pick(rows.back(), observable) == level)
    return rows.back().value;
  return std::nullopt;
}

} // namespace dstirap
