#include "faircert/report_io.hpp"

#include <sstream>

#include "faircert/errors.hpp"
#include "json.hpp"

namespace faircert {

using json = nlohmann::ordered_json;

namespace {

OverallVerdict verdict_from(const std::string& name) {
  for (auto v : {OverallVerdict::kCertifiedFair, OverallVerdict::kFalsifiedUnfair, OverallVerdict::kUndecided}) {
    if (name == to_string(v)) return v;
  }
  throw Error(ErrorCode::kParse, "unknown report verdict '" + name + "'");
}

json config_to_json(const EngineConfig& cfg) {
  return {
      {"max_refinement_depth", cfg.refine.max_refinement_depth},
      {"min_sample_depth", cfg.refine.min_sample_depth},
      {"samples_per_check", cfg.refine.samples_per_check},
      {"seed", cfg.refine.rng_seed},
      {"timeout_seconds", cfg.timeout_seconds},
      {"workers", cfg.workers},
      {"deterministic", cfg.deterministic},
      {"max_recorded_cex", cfg.max_recorded_cex},
  };
}

EngineConfig config_from_json(const json& node) {
  EngineConfig cfg;
  cfg.refine.max_refinement_depth = node.at("max_refinement_depth").get<int>();
  cfg.refine.min_sample_depth = node.at("min_sample_depth").get<int>();
  cfg.refine.samples_per_check = node.at("samples_per_check").get<int>();
  cfg.refine.rng_seed = node.at("seed").get<std::uint64_t>();
  cfg.timeout_seconds = node.at("timeout_seconds").get<double>();
  cfg.workers = node.at("workers").get<int>();
  cfg.deterministic = node.at("deterministic").get<bool>();
  cfg.max_recorded_cex = node.at("max_recorded_cex").get<std::size_t>();
  return cfg;
}

json report_document(const Report& report) {
  json cex = json::array();
  for (const auto& pair : report.counterexamples) {
    cex.push_back({{"x", pair.x},
                   {"x_prime", pair.x_prime},
                   {"score", pair.score},
                   {"score_prime", pair.score_prime}});
  }
  json doc;
  doc["verdict"] = to_string(report.verdict);
  doc["rates"] = {{"certified", report.rates.certified},
                  {"falsified", report.rates.falsified},
                  {"undecided", report.rates.undecided}};
  doc["cex_count"] = report.cex_count;
  doc["counterexamples"] = std::move(cex);
  doc["partitions_processed"] = report.partitions_processed;
  doc["max_depth_reached"] = report.max_depth_reached;
  doc["elapsed_seconds"] = report.elapsed_seconds;
  doc["timed_out"] = report.timed_out;
  doc["config"] = config_to_json(report.config);
  return doc;
}

}  // namespace

std::string report_to_json(const Report& report) {
  return report_document(report).dump(2) + "\n";
}

std::string report_to_json(const Report& report, const OracleComparison& oracle) {
  json doc = report_document(report);
  doc["oracle"] = {{"total_pairs", oracle.exact.total_pairs},
                   {"fair_pairs", oracle.exact.fair_pairs},
                   {"unfair_pairs", oracle.exact.unfair_pairs},
                   {"certified_is_lower_bound", oracle.certified_is_lower_bound},
                   {"falsified_is_lower_bound", oracle.falsified_is_lower_bound},
                   {"fair_partitions_verified", oracle.fair_partitions_verified},
                   {"unfair_partitions_verified", oracle.unfair_partitions_verified}};
  return doc.dump(2) + "\n";
}

Report report_from_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    Report report;
    report.verdict = verdict_from(doc.at("verdict").get<std::string>());
    const json& rates = doc.at("rates");
    report.rates.certified = rates.at("certified").get<double>();
    report.rates.falsified = rates.at("falsified").get<double>();
    report.rates.undecided = rates.at("undecided").get<double>();
    report.cex_count = doc.at("cex_count").get<std::uint64_t>();
    for (const auto& node : doc.at("counterexamples")) {
      report.counterexamples.push_back({node.at("x").get<std::vector<double>>(),
                                        node.at("x_prime").get<std::vector<double>>(),
                                        node.at("score").get<double>(),
                                        node.at("score_prime").get<double>()});
    }
    report.partitions_processed = doc.at("partitions_processed").get<std::uint64_t>();
    report.max_depth_reached = doc.at("max_depth_reached").get<int>();
    report.elapsed_seconds = doc.at("elapsed_seconds").get<double>();
    report.timed_out = doc.at("timed_out").get<bool>();
    report.config = config_from_json(doc.at("config"));
    return report;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("malformed report: ") + e.what());
  }
}

std::string partitions_to_csv(const Report& report, const DomainSpec& domain) {
  std::ostringstream out;
  out.precision(17);
  out << "depth,status,measure,rate";
  for (const auto& a : domain.attributes()) out << ',' << a.name << "_lb," << a.name << "_ub";
  out << '\n';
  const double total = domain_measure(domain);
  for (const auto& record : report.partitions) {
    out << record.partition.depth << ',' << to_string(record.status) << ',' << record.measure << ','
        << record.measure / total;
    for (const auto& b : record.partition.bounds) out << ',' << b.lo << ',' << b.hi;
    out << '\n';
  }
  return out.str();
}

}  // namespace faircert
