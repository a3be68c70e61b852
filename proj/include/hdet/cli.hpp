#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hdet {

enum class Command { bound, tau, sweep, verify, figures, corollary, invert, hankel };
enum class OutputFormat { text, json, csv };

/// Parsed command line. Numeric parameters stay as text until dispatch so they
/// can be validated (and echoed) exactly as given.
struct RunConfig {
  Command command = Command::bound;
  std::vector<std::string> m{"1"};
  std::vector<std::string> lambda{"1"};
  std::vector<std::string> gamma{"0"};
  std::vector<std::string> beta{"0"};
  std::uint64_t samples = 100000;
  std::uint64_t seed = 42;
  int rho_steps = 401;
  int mu_steps = 101;
  bool check = false;
  std::string kind;    // corollary kind or figure kind
  std::vector<std::string> coeffs;
  int q = 2;
  int n = 1;
  OutputFormat output_format = OutputFormat::text;
  std::optional<std::string> output_path;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Relative oracle gap above which `sweep --check` fails.
inline constexpr double kSweepGapTolerance = 1e-4;

/// Runs one command. `arguments` excludes the program name. Results go to
/// `out` (or the --output file), diagnostics to `err`. Returns 0 on success,
/// 1 when a verification finds violations, 2 on malformed arguments or
/// out-of-range parameters.
int run_cli(std::span<const std::string> arguments, std::ostream& out, std::ostream& err);

}  // namespace hdet
