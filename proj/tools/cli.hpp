#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

namespace faircert::cli {

enum ExitCode : int {
  kExitCertified = 0,
  kExitFalsified = 1,
  kExitUndecided = 2,
  kExitUsage = 10,
  kExitLoad = 11,
  kExitOracle = 12,
  kExitOutput = 13,
  kExitInternal = 14,
};

enum class OutputFormat { kJson, kCsv };

struct CliArgs {
  std::string model_path;
  std::string domain_path;
  std::optional<std::string> protected_name;
  int max_depth = 20;
  int min_sample_depth = 15;
  int samples = 10;
  double timeout_seconds = 1800.0;
  std::uint64_t seed = 0;
  int workers = 1;
  bool deterministic = false;
  std::optional<std::string> output_path;
  OutputFormat format = OutputFormat::kJson;
  bool oracle_check = false;
};

// Environment variable naming a TOML/INI file of default flag values.
inline constexpr const char* kConfigEnvVar = "FAIRCERT_CONFIG";

// Either parsed arguments or the exit code to stop with (help prints 0).
std::variant<CliArgs, int> parse_args(int argc, const char* const* argv, std::ostream& out,
                                      std::ostream& err);

int run(const CliArgs& args, std::ostream& out, std::ostream& err);

// Rate as a percentage truncated (not rounded) to two decimals, e.g. "97.27".
std::string format_percent(double rate);

}  // namespace faircert::cli
