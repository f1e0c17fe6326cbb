#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "faircert/faircert.hpp"

namespace faircert::cli {

std::string format_percent(double rate) {
  // The epsilon keeps values such as 0.57 (stored as 0.5699999...) from
  // truncating a whole hundredth low.
  const double hundredths = std::floor(rate * 10000.0 + 1e-6);
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.2f", hundredths / 100.0);
  return buffer;
}

std::variant<CliArgs, int> parse_args(int argc, const char* const* argv, std::ostream& out,
                                      std::ostream& err) {
  CliArgs args;
  std::string protected_name;
  std::string output_path;
  std::string format = "json";

  CLI::App app{"Certify, falsify and quantify individual fairness of a ReLU classifier"};
  app.set_config("--config", "", "TOML/INI file with default flag values")->envname(kConfigEnvVar);
  app.add_option("-m,--model", args.model_path, "Network JSON file")->required();
  app.add_option("-d,--domain", args.domain_path, "Domain JSON file")->required();
  app.add_option("-p,--protected", protected_name, "Override the protected attribute name");
  app.add_option("--max-depth", args.max_depth, "Maximum refinement depth")->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  app.add_option("--min-sample-depth", args.min_sample_depth, "Depth at which sampling starts")
      ->capture_default_str()->check(CLI::NonNegativeNumber);
  app.add_option("--samples", args.samples, "Samples per counterexample check")->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  app.add_option("-t,--timeout", args.timeout_seconds, "Wall-clock timeout in seconds")
      ->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("-s,--seed", args.seed, "Random seed")->capture_default_str();
  app.add_option("-j,--workers", args.workers, "Worker threads")->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_flag("--deterministic", args.deterministic, "Single worker, reproducible report");
  app.add_option("-o,--output", output_path, "Report output path");
  app.add_option("-f,--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_flag("--oracle-check", args.oracle_check,
               "Cross-check the rates against exhaustive enumeration (discrete domains only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(kExitUsage);
  }
  if (args.min_sample_depth > args.max_depth) {
    err << "error: --min-sample-depth (" << args.min_sample_depth << ") exceeds --max-depth ("
        << args.max_depth << ")\n";
    return static_cast<int>(kExitUsage);
  }
  if (args.deterministic && args.workers != 1) {
    err << "error: --deterministic requires --workers 1\n";
    return static_cast<int>(kExitUsage);
  }
  if (!protected_name.empty()) args.protected_name = protected_name;
  if (!output_path.empty()) args.output_path = output_path;
  args.format = format == "csv" ? OutputFormat::kCsv : OutputFormat::kJson;
  return args;
}

namespace {

int exit_code_for(OverallVerdict verdict) {
  switch (verdict) {
    case OverallVerdict::kCertifiedFair: return kExitCertified;
    case OverallVerdict::kFalsifiedUnfair: return kExitFalsified;
    case OverallVerdict::kUndecided: break;
  }
  return kExitUndecided;
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  file << text;
  return static_cast<bool>(file);
}

void print_summary(const Report& report, double wall_seconds, std::ostream& out) {
  out << std::left << std::setw(18) << "Verdict" << std::setw(9) << "Cer(%)" << std::setw(9)
      << "Fal(%)" << std::setw(9) << "Und(%)" << std::setw(10) << "#Cex" << "Time(s)\n";
  std::ostringstream time;
  time << std::fixed << std::setprecision(2) << wall_seconds;
  out << std::left << std::setw(18) << to_string(report.verdict) << std::setw(9)
      << format_percent(report.rates.certified) << std::setw(9) << format_percent(report.rates.falsified)
      << std::setw(9) << format_percent(report.rates.undecided) << std::setw(10) << report.cex_count
      << time.str() << (report.timed_out ? " (timeout)" : "") << '\n';
  out << "partitions: " << report.partitions_processed << ", max depth: " << report.max_depth_reached
      << '\n';
}

}  // namespace

int run(const CliArgs& args, std::ostream& out, std::ostream& err) {
  std::optional<Network> net;
  std::optional<DomainSpec> domain;
  try {
    net = load_network(args.model_path);
  } catch (const Error& e) {
    err << "error: model '" << args.model_path << "': " << e.what() << '\n';
    return kExitLoad;
  }
  try {
    domain = load_domain(args.domain_path);
    if (args.protected_name) domain = domain->with_protected(*args.protected_name);
  } catch (const Error& e) {
    err << "error: domain '" << args.domain_path << "': " << e.what() << '\n';
    return kExitLoad;
  }
  if (net->input_dim() != domain->size()) {
    err << "error: model '" << args.model_path << "' expects " << net->input_dim()
        << " inputs but domain '" << args.domain_path << "' declares " << domain->size()
        << " attributes\n";
    return kExitLoad;
  }

  EngineConfig cfg;
  cfg.refine.max_refinement_depth = args.max_depth;
  cfg.refine.min_sample_depth = args.min_sample_depth;
  cfg.refine.samples_per_check = args.samples;
  cfg.refine.rng_seed = args.seed;
  cfg.timeout_seconds = args.timeout_seconds;
  cfg.workers = args.workers;
  cfg.deterministic = args.deterministic;
  cfg.record_partitions = args.format == OutputFormat::kCsv;

  const auto start = std::chrono::steady_clock::now();
  Report report;
  std::optional<OracleComparison> oracle;
  try {
    if (args.oracle_check) {
      AuditedReport audited = certify_exact_rates_check(*net, *domain, cfg);
      report = std::move(audited.report);
      oracle = std::move(audited.oracle);
    } else {
      report = certify(*net, *domain, cfg);
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kOracleLimit || (args.oracle_check && e.code() == ErrorCode::kInvalidDomain)) {
      err << "error: --oracle-check: " << e.what() << '\n';
      return kExitOracle;
    }
    if (e.code() == ErrorCode::kInvalidArgument) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
    err << "error: " << e.what() << '\n';
    return kExitInternal;
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  print_summary(report, wall, out);
  if (oracle) {
    out << "oracle: " << oracle->exact.fair_pairs << "/" << oracle->exact.total_pairs << " fair pairs, "
        << oracle->exact.unfair_pairs << " unfair; lower bounds "
        << (oracle->holds() ? "hold" : "VIOLATED") << '\n';
  }

  if (args.output_path) {
    const std::string text = args.format == OutputFormat::kCsv
                                 ? partitions_to_csv(report, *domain)
                                 : (oracle ? report_to_json(report, *oracle) : report_to_json(report));
    if (!write_file(*args.output_path, text)) {
      err << "error: output '" << *args.output_path << "': cannot write file\n";
      return kExitOutput;
    }
  }
  if (oracle && !oracle->holds()) {
    err << "error: oracle cross-check failed\n";
    return kExitInternal;
  }
  return exit_code_for(report.verdict);
}

}  // namespace faircert::cli
