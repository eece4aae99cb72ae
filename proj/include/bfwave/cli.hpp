#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <iosfwd>

namespace bfwave {

// Raised for invalid user input (missing flags, malformed ranges); the
// driver maps it to exit code 2.  Computation failures propagate as other
// exceptions and exit with 1.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GridSpec {
  double lo = 0.0;
  double hi = 0.0;
  int count = 1;

  std::vector<double> points() const;
};

// Parses "lo:hi:count".
GridSpec parse_grid(const std::string& text);

struct RunConfig {
  std::optional<double> h;
  std::optional<GridSpec> h_range;
  std::optional<double> eps;
  std::optional<GridSpec> eps_range;
  std::optional<double> mu;
  int modes = 32;
  int samples = 200;
  int jobs = 1;
  std::optional<double> tol;
  std::string format = "csv";
  std::string out;
};

// Executes one subcommand, writing the table to sink.  Returns the process
// exit code (nonzero only for "validate" when criteria fail).
int run_command(const std::string& command, const RunConfig& cfg,
                std::ostream& sink);

}  // namespace bfwave
