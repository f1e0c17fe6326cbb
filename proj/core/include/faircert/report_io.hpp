#pragma once

#include <string>
#include <string_view>

#include "faircert/domain.hpp"
#include "faircert/engine.hpp"

namespace faircert {

// {"verdict", "rates": {"certified", "falsified", "undecided"}, "cex_count",
//  "counterexamples": [{"x", "x_prime", "score", "score_prime"}],
//  "partitions_processed", "max_depth_reached", "elapsed_seconds",
//  "timed_out", "config": {...}}
// Partition records are not part of the JSON report; see partitions_to_csv.
std::string report_to_json(const Report& report);
std::string report_to_json(const Report& report, const OracleComparison& oracle);
Report report_from_json(std::string_view text);

// Header: depth,status,measure,rate,<name>_lb,<name>_ub,... one row per
// terminal partition, in the order the engine recorded them.
std::string partitions_to_csv(const Report& report, const DomainSpec& domain);

}  // namespace faircert
