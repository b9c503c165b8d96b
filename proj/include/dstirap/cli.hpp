#pragma once

// Command-line front end: parse_args builds a CommandSpec, execute runs it.
//
//   dstirap run            --config FILE [--out FILE] [--set key=value]...
//   dstirap sweep-delay    ... [--from X --to Y --points N]
//   dstirap sweep-area     ...
//   dstirap sweep-momentum ...
//   dstirap diagnostics    ...
//
// Exit codes: 0 success, 1 invalid input, 2 integration failure.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dstirap::cli {

enum class Command { Run, SweepDelay, SweepArea, SweepMomentum, Diagnostics };

struct GridOverride {
  std::optional<double> from;
  std::optional<double> to;
  std::optional<std::size_t> points;
};

struct CommandSpec {
  Command command = Command::Run;
  std::string config_path;
  std::optional<std::string> out_path; ///< stdout when empty
  std::vector<std::pair<std::string, std::string>> overrides;
  GridOverride grid;
  std::size_t samples = 1025;
  unsigned threads = 0;
};

/// Bad command line; the message carries usage text.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// --help; the message is the help text.
class HelpRequested : public UsageError {
public:
  using UsageError::UsageError;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitIntegration = 2;

/// argv without the program name.
CommandSpec parse_args(const std::vector<std::string>& args);

/// Runs the command.  CSV goes to spec.out_path or `out`; messages go to
/// `err`.  Returns the process exit code.
int execute(const CommandSpec& spec, std::ostream& out, std::ostream& err);

/// parse_args + execute with usage errors reported on `err`.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dstirap::cli
