#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "faircert/domain.hpp"
#include "faircert/network.hpp"
#include "faircert/refinement.hpp"

namespace faircert {

inline constexpr std::uint64_t kDefaultOraclePairLimit = 1'000'000;

// Ground truth from enumerating every unprotected grid point. Depends only on
// evaluate(), never on the symbolic machinery.
struct ExactFairness {
  std::uint64_t total_pairs = 0;
  std::uint64_t fair_pairs = 0;
  std::uint64_t unfair_pairs = 0;
  // x has the protected attribute at 0, x_prime at 1.
  std::vector<CounterexamplePair> violating_pairs;

  double fair_fraction() const noexcept {
    return total_pairs == 0 ? 0.0 : static_cast<double>(fair_pairs) / static_cast<double>(total_pairs);
  }
  double unfair_fraction() const noexcept {
    return total_pairs == 0 ? 0.0 : static_cast<double>(unfair_pairs) / static_cast<double>(total_pairs);
  }
};

// Throws ErrorCode::kInvalidDomain for real-valued attributes and
// ErrorCode::kOracleLimit when the pair count exceeds `limit`.
ExactFairness exhaustive_fairness(const Network& net, const DomainSpec& domain,
                                  std::uint64_t limit = kDefaultOraclePairLimit);

// Same enumeration restricted to one partition.
ExactFairness exhaustive_fairness(const Network& net, const DomainSpec& domain, const Partition& p,
                                  std::uint64_t limit = kDefaultOraclePairLimit);

bool check_partition_fair(const Network& net, const DomainSpec& domain, const Partition& p,
                          std::uint64_t limit = kDefaultOraclePairLimit);

// True iff every pair inside `p` is a counterexample.
bool check_partition_unfair(const Network& net, const DomainSpec& domain, const Partition& p,
                            std::uint64_t limit = kDefaultOraclePairLimit);

}  // namespace faircert
