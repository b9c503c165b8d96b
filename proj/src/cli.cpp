#include "dstirap/cli.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dstirap/analysis.hpp"
#include "dstirap/csv.hpp"
#include "dstirap/simulation.hpp"
#include "dstirap/sweeps.hpp"
#include "dstirap/units.hpp"

namespace dstirap::cli {

namespace {

constexpr std::array<const char*, 9> kConfigKeys = {
    "q", "omega0", "pulse_width", "delay", "detuning",
    "t_start", "t_end", "rtol", "norm_tol"};

struct Subcommand {
  const char* name;
  Command command;
  const char* help;
};

constexpr std::array<Subcommand, 5> kSubcommands = {{
    {"run", Command::Run, "single propagation, writes the trajectory"},
    {"sweep-delay", Command::SweepDelay, "final populations versus pulse delay"},
    {"sweep-area", Command::SweepArea, "final populations versus pulse area omega0*T"},
    {"sweep-momentum", Command::SweepMomentum, "final populations versus momentum q"},
    {"diagnostics", Command::Diagnostics, "adiabaticity and decoupling conditions"},
}};

bool is_sweep(Command c) {
  return c == Command::SweepDelay || c == Command::SweepArea ||
         c == Command::SweepMomentum;
}

} // namespace

CommandSpec parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Lambda-system population transfer with photon recoil", "dstirap"};
  app.require_subcommand(1);

  CommandSpec spec;
  std::vector<std::string> sets;
  std::string out;
  double from = 0.0, to = 0.0;
  std::size_t points = 0;

  std::vector<std::pair<CLI::App*, Command>> subs;
  for (const auto& s : kSubcommands) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--config,-c", spec.config_path, "key = value parameter file")
        ->required();
    sub->add_option("--out,-o", out, "output CSV (default: stdout)");
    sub->add_option("--set", sets, "override a config key, key=value")
        ->take_all();
    sub->add_option("--samples", spec.samples, "trajectory samples per run")
        ->check(CLI::Range(std::size_t{2}, std::size_t{10'000'000}));
    if (is_sweep(s.command)) {
      sub->add_option("--from", from, "first grid value");
      sub->add_option("--to", to, "last grid value");
      sub->add_option("--points", points, "grid points")->check(CLI::PositiveNumber);
      sub->add_option("--threads", spec.threads, "worker threads (0: all cores)");
    }
    subs.emplace_back(sub, s.command);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    msg << e.what() << "\n\n" << app.help();
    throw UsageError(msg.str());
  }

  for (const auto& [sub, command] : subs) {
    if (!sub->parsed())
      continue;
    spec.command = command;
    if (!is_sweep(command))
      continue;
    if (sub->count("--from"))
      spec.grid.from = from;
    if (sub->count("--to"))
      spec.grid.to = to;
    if (sub->count("--points"))
      spec.grid.points = points;
  }
  if (!out.empty())
    spec.out_path = out;

  for (const std::string& s : sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos)
      throw UsageError("--set expects key=value, got '" + s + "'\n\n" + app.help());
    std::string key = s.substr(0, eq);
    if (std::find(kConfigKeys.begin(), kConfigKeys.end(), key) == kConfigKeys.end())
      throw UsageError("unknown config key '" + key + "' in --set\n\n" + app.help());
    spec.overrides.emplace_back(std::move(key), s.substr(eq + 1));
  }
  return spec;
}

namespace {

std::vector<double> grid_for(const CommandSpec& spec, const SimulationConfig& config,
                             SweepParameter parameter) {
  std::vector<double> defaults;
  switch (parameter) {
  case SweepParameter::Delay:
    defaults = default_delay_grid(config.pulse_width);
    break;
  case SweepParameter::Area:
    defaults = default_area_grid();
    break;
  case SweepParameter::Momentum:
    defaults = default_momentum_grid();
    break;
  }
  const double first = spec.grid.from.value_or(defaults.front());
  const double last = spec.grid.to.value_or(defaults.back());
  const std::size_t n = spec.grid.points.value_or(defaults.size());
  if (!spec.grid.from && !spec.grid.to && !spec.grid.points)
    return defaults;
  return linspace(first, last, n);
}

void emit(const CommandSpec& spec, std::ostream& out,
          const std::function<void(std::ostream&)>& write) {
  if (!spec.out_path) {
    write(out);
    return;
  }
  std::ofstream file(*spec.out_path, std::ios::binary);
  if (!file)
    throw ConfigError("cannot open output file '" + *spec.out_path + "'");
  write(file);
  if (!file)
    throw std::runtime_error("failed writing '" + *spec.out_path + "'");
}

int run_command(const CommandSpec& spec, std::ostream& out, std::ostream& err) {
  SimulationConfig config = load_config(spec.config_path);
  for (const auto& [key, value] : spec.overrides)
    apply_setting(config, key, value);
  validate(config);

  switch (spec.command) {
  case Command::Run: {
    PropagatorOptions options = PropagatorOptions::from(config.tolerances);
    options.samples = spec.samples;
    const PropagationResult result = simulate(config, options);
    emit(spec, out, [&](std::ostream& o) {
      write_trajectory_csv(o, config, result.trajectory);
    });
    const auto p = populations(result.final_state);
    err << "final P1=" << format_number(p[0]) << " P2=" << format_number(p[1])
        << " P3=" << format_number(p[2])
        << " maxP2=" << format_number(max_intermediate_population(result.trajectory))
        << " kick=" << format_number(momentum_kick(p)) << '\n';
    return kExitOk;
  }
  case Command::SweepDelay:
  case Command::SweepArea:
  case Command::SweepMomentum: {
    SweepSpec sweep;
    sweep.base = config;
    sweep.parameter = spec.command == Command::SweepDelay  ? SweepParameter::Delay
                      : spec.command == Command::SweepArea ? SweepParameter::Area
                                                           : SweepParameter::Momentum;
    sweep.grid = grid_for(spec, config, sweep.parameter);
    sweep.samples = spec.samples;
    sweep.threads = spec.threads;
    if (sweep.parameter == SweepParameter::Area)
      sweep.notes.push_back("delay sign as configured; negative delay = intuitive order "
                            "(pump first)");
    const SweepResult result = run_sweep(sweep);
    emit(spec, out, [&](std::ostream& o) { write_sweep_csv(o, result); });
    err << "wrote " << result.rows.size() << " rows\n";
    return kExitOk;
  }
  case Command::Diagnostics: {
    const DiagnosticsReport report = adiabaticity_report(config, spec.samples);
    emit(spec, out, [&](std::ostream& o) { write_report_csv(o, config, report); });
    for (const auto& c : report.summaries())
      err << c.name << ": worst=" << format_number(c.worst)
          << (c.satisfied ? " satisfied" : " violated") << '\n';
    return kExitOk;
  }
  }
  return kExitInvalid;
}

} // namespace

int execute(const CommandSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    return run_command(spec, out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const IntegrationError& e) {
    err << "integration failure: " << e.what() << '\n';
    return kExitIntegration;
  } catch (const SweepError& e) {
    err << "integration failure: " << e.what() << '\n';
    return kExitIntegration;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CommandSpec spec;
  try {
    spec = parse_args(args);
  } catch (const HelpRequested& e) {
    out << e.what();
    return kExitOk;
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kExitInvalid;
  }
  return execute(spec, out, err);
}

} // namespace dstirap::cli
