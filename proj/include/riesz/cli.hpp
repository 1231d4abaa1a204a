// Command-line front end: argument parsing, command dispatch and dataset
// emission. `riesz_main` wraps everything the executable does so the whole
// surface is testable in-process.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "riesz/coefficients.hpp"
#include "riesz/criteria.hpp"

namespace riesz::cli {

inline constexpr const char* kVersion = "riesz 1.0.0";

enum ExitCode : int {
  kSuccess = 0,
  kRuntimeError = 1,
  kUsageError = 2,
  kInsufficientPrecision = 3,
};

enum class Command { Ck, Phi, Zeta, Mobius, Experiment };
enum class Format { Csv, Json };

struct RunConfig {
  Command command = Command::Ck;
  FamilyParams params;
  std::uint32_t k_max = 100;
  std::uint32_t n_max = 10000;
  unsigned precision_bits = PrecisionContext::kDefaultBits;
  /// --precision-bits given explicitly: binomial-zeta runs refuse instead
  /// of raising precision per k.
  bool precision_explicit = false;
  Method method = Method::BinomialZeta;
  Format format = Format::Csv;
  std::optional<std::string> output_path;  // standard output when empty
  int digits = 30;
  unsigned threads = 0;

  std::string experiment;           // experiment
  std::vector<double> sigma;        // zeta
  double s_re = 3.0;                // phi
  double s_im = 0.0;
  bool k_max_given = false;
  bool n_max_given = false;
  bool method_given = false;
};

/// Usage problem; `exit_code` is 0 for --help / --version.
class UsageError : public std::runtime_error {
 public:
  UsageError(const std::string& message, int exit_code = kUsageError)
      : std::runtime_error(message), exit_code_(exit_code) {}
  [[nodiscard]] int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

/// Validated configuration. Flags win over `--config FILE` (key=value lines
/// named like the long flags). Throws UsageError.
RunConfig parse_args(int argc, const char* const* argv);

/// CSV: header row, one record per row, LF endings, '.' decimal point,
/// reals with `digits` significant digits.
void write_csv(const Dataset& d, std::ostream& out, int digits);

/// {"meta": {...}, "columns": {name: [...]}}; reals as decimal strings so
/// they round-trip exactly.
void write_json(const Dataset& d, std::ostream& out, int digits);

/// Writes to output_path or `out`. Throws riesz::Error on I/O failure.
void emit_dataset(const Dataset& d, Format format, const std::optional<std::string>& path,
                  int digits, std::ostream& out);

/// Parses the JSON written by write_json back into a dataset; reals are
/// read at `bits` of precision.
Dataset read_json(const std::string& text, unsigned bits);

/// Builds the dataset a configuration asks for.
Dataset execute(const RunConfig& config);

/// Full program: parse, run, emit. Returns the process exit code.
int riesz_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace riesz::cli
