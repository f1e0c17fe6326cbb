#include "faircert/oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "faircert/errors.hpp"
#include "test_support.hpp"

namespace faircert {
namespace {

using testing::narrowed;
using testing::running_example_domain;
using testing::running_example_network;

TEST(ExhaustiveFairness, RunningExample) {
  const ExactFairness exact = exhaustive_fairness(running_example_network(), running_example_domain());
  EXPECT_EQ(exact.total_pairs, 30u);
  EXPECT_EQ(exact.fair_pairs, 25u);
  EXPECT_EQ(exact.unfair_pairs, 5u);
  ASSERT_EQ(exact.violating_pairs.size(), 5u);
  const std::vector<double> x{1, 0, 3}, x_prime{1, 1, 3};
  EXPECT_TRUE(std::any_of(exact.violating_pairs.begin(), exact.violating_pairs.end(),
                          [&](const CounterexamplePair& p) { return p.x == x && p.x_prime == x_prime; }));
  for (const auto& p : exact.violating_pairs) {
    EXPECT_EQ(p.x[1], 0.0);
    EXPECT_EQ(p.x_prime[1], 1.0);
  }
}

TEST(ExhaustiveFairness, ConstantNetworkIsFair) {
  const ExactFairness exact = exhaustive_fairness(testing::constant_network(3, 1.0), running_example_domain());
  EXPECT_EQ(exact.fair_pairs, 30u);
  EXPECT_EQ(exact.fair_fraction(), 1.0);
  EXPECT_EQ(exact.unfair_fraction(), 0.0);
}

TEST(ExhaustiveFairness, ProtectedOnlyNetworkIsUnfair) {
  const ExactFairness exact =
      exhaustive_fairness(testing::protected_only_network(-2, 1), testing::protected_only_domain());
  EXPECT_EQ(exact.total_pairs, 1u);
  EXPECT_EQ(exact.unfair_pairs, 1u);
}

TEST(ExhaustiveFairness, Errors) {
  const DomainSpec real({{"r", AttributeKind::kReal, 0, 1}, {"p", AttributeKind::kBinary, 0, 1}}, 1);
  try {
    exhaustive_fairness(testing::constant_network(2, 1), real);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidDomain);
  }
  try {
    exhaustive_fairness(running_example_network(), running_example_domain(), 29);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOracleLimit);
  }
}

TEST(PartitionChecks, RunningExample) {
  const DomainSpec domain = running_example_domain();
  const Network net = running_example_network();
  EXPECT_TRUE(check_partition_fair(net, domain, narrowed(domain, 0, 4, 5)));
  EXPECT_TRUE(check_partition_fair(net, domain, narrowed(domain, 0, 3, 3)));
  EXPECT_FALSE(check_partition_fair(net, domain, root_partition(domain)));
  EXPECT_FALSE(check_partition_unfair(net, domain, root_partition(domain)));

  Partition point = narrowed(domain, 0, 1, 1);
  point.bounds[2] = {3, 3};
  EXPECT_TRUE(check_partition_unfair(net, domain, point));
  EXPECT_FALSE(check_partition_fair(net, domain, point));
  EXPECT_EQ(exhaustive_fairness(net, domain, point).total_pairs, 1u);
}

}  // namespace
}  // namespace faircert
