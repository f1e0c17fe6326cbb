#include "cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "faircert/network.hpp"
#include "faircert/report_io.hpp"
#include "test_support.hpp"

namespace faircert::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> argv) {
  argv.insert(argv.begin(), "faircert");
  std::vector<const char*> raw;
  for (const auto& a : argv) raw.push_back(a.c_str());
  std::ostringstream out, err;
  const auto parsed = parse_args(static_cast<int>(raw.size()), raw.data(), out, err);
  if (const int* code = std::get_if<int>(&parsed)) return {*code, out.str(), err.str()};
  const int code = run(std::get<CliArgs>(parsed), out, err);
  return {code, out.str(), err.str()};
}

std::string model() { return testing::data_path("running_example_network.json").string(); }
std::string domain() { return testing::data_path("running_example_domain.json").string(); }

fs::path temp_file(const std::string& name) { return fs::temp_directory_path() / ("faircert_cli_" + name); }

// Value in the Cex column of the summary row.
long cex_column(const std::string& out) {
  std::istringstream in(out);
  std::string header, row, verdict, cer, fal, und;
  std::getline(in, header);
  std::getline(in, row);
  std::istringstream fields(row);
  long cex = -1;
  fields >> verdict >> cer >> fal >> und >> cex;
  return cex;
}

TEST(FormatPercent, Truncates) {
  EXPECT_EQ(format_percent(0.97279), "97.27");
  EXPECT_EQ(format_percent(0.57), "57.00");
  EXPECT_EQ(format_percent(1.0), "100.00");
  EXPECT_EQ(format_percent(0.0), "0.00");
  EXPECT_EQ(format_percent(2.0 / 3.0), "66.66");
}

TEST(Cli, RunningExampleIsUndecidedWithCounterexamples) {
  const Outcome o = invoke({"-m", model(), "-d", domain(), "--deterministic"});
  EXPECT_EQ(o.code, kExitUndecided) << o.err;
  EXPECT_NE(o.out.find("Cer(%)"), std::string::npos);
  EXPECT_NE(o.out.find("#Cex"), std::string::npos);
  EXPECT_GE(cex_column(o.out), 1);
}

TEST(Cli, ConstantModelIsCertified) {
  const fs::path path = temp_file("constant.json");
  save_network(testing::constant_network(3, 1.0), path);
  const Outcome o = invoke({"-m", path.string(), "-d", domain()});
  EXPECT_EQ(o.code, kExitCertified) << o.err;
  EXPECT_NE(o.out.find("100.00"), std::string::npos);
  fs::remove(path);
}

TEST(Cli, LoadAndUsageErrors) {
  const Outcome missing = invoke({"-m", "/nonexistent.json", "-d", domain()});
  EXPECT_EQ(missing.code, kExitLoad);
  EXPECT_NE(missing.err.find("/nonexistent.json"), std::string::npos);
  EXPECT_GE(invoke({"-d", domain()}).code, 10);
  EXPECT_EQ(invoke({"-m", model(), "-d", domain(), "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(invoke({"-m", model(), "-d", domain(), "--max-depth", "5"}).code, kExitUsage);
  EXPECT_EQ(invoke({"-m", model(), "-d", domain(), "-p", "x1"}).code, kExitLoad);
}

TEST(Cli, WritesJsonAndCsv) {
  const fs::path json_path = temp_file("report.json");
  const Outcome j = invoke({"-m", model(), "-d", domain(), "--deterministic", "-o", json_path.string()});
  ASSERT_EQ(j.code, kExitUndecided);
  std::ifstream jf(json_path);
  const std::string text((std::istreambuf_iterator<char>(jf)), std::istreambuf_iterator<char>());
  EXPECT_EQ(report_from_json(text).verdict, OverallVerdict::kUndecided);

  const fs::path csv_path = temp_file("partitions.csv");
  const Outcome c = invoke({"-m", model(), "-d", domain(), "-f", "csv", "-o", csv_path.string()});
  ASSERT_EQ(c.code, kExitUndecided);
  std::ifstream cf(csv_path);
  std::string header;
  std::getline(cf, header);
  EXPECT_EQ(header.rfind("depth,status,measure,rate,", 0), 0u);

  EXPECT_EQ(invoke({"-m", model(), "-d", domain(), "-o", "/nonexistent/dir/out.json"}).code, kExitOutput);
  fs::remove(json_path);
  fs::remove(csv_path);
}

TEST(Cli, OracleCheck) {
  const Outcome o = invoke({"-m", model(), "-d", domain(), "--oracle-check"});
  EXPECT_EQ(o.code, kExitUndecided) << o.err;
  EXPECT_NE(o.out.find("25/30 fair pairs"), std::string::npos);
}

TEST(Cli, ConfigFileFromEnvironment) {
  const fs::path cfg = temp_file("defaults.toml");
  {
    std::ofstream f(cfg);
    f << "max-depth = 5\nmin-sample-depth = 5\n";
  }
  ::setenv(kConfigEnvVar, cfg.string().c_str(), 1);
  const fs::path json_path = temp_file("env.json");
  const Outcome o = invoke({"-m", model(), "-d", domain(), "--deterministic", "-o", json_path.string()});
  ::unsetenv(kConfigEnvVar);
  ASSERT_EQ(o.code, kExitUndecided) << o.err;
  std::ifstream jf(json_path);
  const std::string text((std::istreambuf_iterator<char>(jf)), std::istreambuf_iterator<char>());
  EXPECT_EQ(report_from_json(text).config.refine.max_refinement_depth, 5);
  fs::remove(cfg);
  fs::remove(json_path);
}

}  // namespace
}  // namespace faircert::cli
