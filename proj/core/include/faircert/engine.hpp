#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "faircert/domain.hpp"
#include "faircert/network.hpp"
#include "faircert/oracle.hpp"
#include "faircert/quantifier.hpp"
#include "faircert/refinement.hpp"

namespace faircert {

struct EngineConfig {
  RefineConfig refine;
  double timeout_seconds = 1800.0;
  int workers = 1;
  bool deterministic = false;
  std::size_t max_recorded_cex = 1000;
  // Keep every terminal partition in Report::partitions (CSV audit, oracle checks).
  bool record_partitions = false;

  void validate() const;
  bool operator==(const EngineConfig&) const = default;
};

enum class OverallVerdict { kCertifiedFair, kFalsifiedUnfair, kUndecided };

const char* to_string(OverallVerdict verdict);

// How a partition left the work stack.
enum class PartitionStatus {
  kFair,
  kUnfair,
  kStoppedMaxDepth,
  kStoppedCexFound,
  kStoppedUnsplittable,
  kUnvisited,  // still on the stack at timeout
};

const char* to_string(PartitionStatus status);

struct PartitionRecord {
  Partition partition;
  PartitionStatus status = PartitionStatus::kUnvisited;
  double measure = 0.0;
};

struct Report {
  OverallVerdict verdict = OverallVerdict::kUndecided;
  RateTriple rates;
  std::uint64_t cex_count = 0;
  std::vector<CounterexamplePair> counterexamples;
  std::uint64_t partitions_processed = 0;
  int max_depth_reached = 0;
  // Zero in deterministic mode so repeated runs serialize identically.
  double elapsed_seconds = 0.0;
  bool timed_out = false;
  EngineConfig config;
  std::vector<PartitionRecord> partitions;
};

// Certifies, falsifies or leaves undecided every region of `domain`.
// Partitions are explored depth first from a LIFO stack with the lower half
// of each split on top. With workers > 1, idle workers take partitions from
// the shared stack and per-worker rates are merged at the end.
Report certify(const Network& net, const DomainSpec& domain, const EngineConfig& cfg);

struct OracleComparison {
  ExactFairness exact;
  bool certified_is_lower_bound = false;
  bool falsified_is_lower_bound = false;
  // Every partition reported fair (unfair) holds only fair (unfair) pairs.
  bool fair_partitions_verified = false;
  bool unfair_partitions_verified = false;

  bool holds() const noexcept {
    return certified_is_lower_bound && falsified_is_lower_bound && fair_partitions_verified &&
           unfair_partitions_verified;
  }
};

struct AuditedReport {
  Report report;
  OracleComparison oracle;
};

// Runs certify and the exhaustive oracle on a discrete domain and compares
// them. Throws before certifying if the oracle cannot handle the domain.
AuditedReport certify_exact_rates_check(const Network& net, const DomainSpec& domain,
                                        const EngineConfig& cfg,
                                        std::uint64_t limit = kDefaultOraclePairLimit);

}  // namespace faircert
