#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace multiphase::cli {

enum class Format { csv, json };
enum class ProbeChoice { product, hb, both };

struct Range {
  int first = 0;
  int last = -1;
  int step = 1;
  std::vector<int> values() const;
};

struct RunConfig {
  std::string command;
  int k = 1;
  std::optional<int> n;
  std::optional<Range> n_range;
  std::optional<Range> k_range;
  bool diagonal = false;  // bounds: sweep k = N
  std::optional<ProbeChoice> probe;
  std::optional<double> tol;
  std::string out;  // empty writes to stdout
  std::optional<Format> format;  // csv unless the command only has JSON
  std::uint64_t seed = 0;
  bool radians = false;
  std::size_t budget = 0;
  int starts = 4;
  int samples = 0;
  std::vector<double> at;
  std::string cost = "holevo-sine";
  std::string mode = "both";  // cost: continuous, discrete or both
  bool quiet = false;
};

/// Bad command-line input; reported with exit code 2.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitValidation = 2;
constexpr int kExitBudget = 3;

/// "a:b" or "a:b:step"; b < a gives an empty range.
Range parse_range(std::string_view text);

/// Round-trip text for a double: 17 significant digits.
std::string format_number(double value);

const std::vector<std::string>& command_names();

void validate(const RunConfig& config);

/// Runs one command, writing data to `out` and progress to `log`.
void run(const RunConfig& config, std::ostream& out, std::ostream& log);

/// Validates, opens the output, runs, and maps failures to exit codes.
int execute(const RunConfig& config, std::ostream& stdout_stream, std::ostream& log);

}  // namespace multiphase::cli
