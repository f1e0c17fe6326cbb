#include "faircert/report_io.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "faircert/errors.hpp"
#include "test_support.hpp"

namespace faircert {
namespace {

Report running_example_report(bool record = false) {
  EngineConfig cfg;
  cfg.deterministic = true;
  cfg.record_partitions = record;
  return certify(testing::running_example_network(), testing::running_example_domain(), cfg);
}

TEST(ReportJson, RoundTrip) {
  const Report r = running_example_report();
  const Report again = report_from_json(report_to_json(r));
  EXPECT_EQ(again.verdict, r.verdict);
  EXPECT_EQ(again.rates, r.rates);
  EXPECT_EQ(again.cex_count, r.cex_count);
  ASSERT_EQ(again.counterexamples.size(), r.counterexamples.size());
  for (std::size_t i = 0; i < r.counterexamples.size(); ++i) {
    EXPECT_EQ(again.counterexamples[i].x, r.counterexamples[i].x);
    EXPECT_EQ(again.counterexamples[i].score_prime, r.counterexamples[i].score_prime);
  }
  EXPECT_EQ(again.partitions_processed, r.partitions_processed);
  EXPECT_EQ(again.max_depth_reached, r.max_depth_reached);
  EXPECT_EQ(again.config, r.config);
  EXPECT_EQ(report_to_json(again), report_to_json(r));
}

TEST(ReportJson, KeyOrder) {
  const std::string text = report_to_json(running_example_report());
  std::size_t last = 0;
  for (const char* key : {"\"verdict\"", "\"rates\"", "\"cex_count\"", "\"counterexamples\"",
                          "\"partitions_processed\"", "\"max_depth_reached\"", "\"elapsed_seconds\"",
                          "\"timed_out\"", "\"config\""}) {
    const std::size_t at = text.find(key);
    ASSERT_NE(at, std::string::npos) << key;
    EXPECT_GT(at, last) << key;
    last = at;
  }
}

TEST(ReportJson, OracleSection) {
  const DomainSpec domain = testing::running_example_domain();
  EngineConfig cfg;
  cfg.deterministic = true;
  const AuditedReport a = certify_exact_rates_check(testing::running_example_network(), domain, cfg);
  const std::string text = report_to_json(a.report, a.oracle);
  EXPECT_NE(text.find("\"oracle\""), std::string::npos);
  EXPECT_NE(text.find("\"fair_pairs\": 25"), std::string::npos);
}

TEST(ReportJson, BadInput) {
  EXPECT_THROW(report_from_json("{"), Error);
  EXPECT_THROW(report_from_json(R"({"verdict": "maybe"})"), Error);
}

TEST(PartitionCsv, RowsCoverTheDomain) {
  const DomainSpec domain = testing::running_example_domain();
  const Report r = running_example_report(true);
  const std::string csv = partitions_to_csv(r, domain);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "depth,status,measure,rate,x1_lb,x1_ub,x2_lb,x2_ub,x3_lb,x3_ub");
  double total = 0;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string depth, status, measure;
    std::getline(fields, depth, ',');
    std::getline(fields, status, ',');
    std::getline(fields, measure, ',');
    total += std::stod(measure);
    ++rows;
  }
  EXPECT_EQ(rows, r.partitions.size());
  EXPECT_EQ(total, 30.0);
}

}  // namespace
}  // namespace faircert
