#include "faircert/oracle.hpp"

#include <cmath>
#include <string>

#include "faircert/errors.hpp"

namespace faircert {

namespace {

std::uint64_t count_pairs(const DomainSpec& domain, const Box& box, std::uint64_t limit) {
  double total = 1.0;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    const auto& a = domain.attribute(i);
    if (!a.discrete()) {
      throw Error(ErrorCode::kInvalidDomain,
                  "oracle needs a discrete domain; attribute '" + a.name + "' is real");
    }
    if (i == domain.protected_index()) continue;
    total *= box[i].hi - box[i].lo + 1.0;
  }
  if (total > static_cast<double>(limit)) {
    throw Error(ErrorCode::kOracleLimit, "domain holds " + std::to_string(total) +
                                             " pairs, above the oracle limit of " +
                                             std::to_string(limit));
  }
  return static_cast<std::uint64_t>(total);
}

// Odometer over the unprotected grid; stops early when `visit` returns false.
template <typename Visit>
void for_each_pair(const Network& net, const DomainSpec& domain, const Box& box, Visit visit) {
  const std::size_t j = domain.protected_index();
  std::vector<double> x(box.size());
  for (std::size_t i = 0; i < box.size(); ++i) x[i] = box[i].lo;
  while (true) {
    x[j] = 0.0;
    const Evaluation a = evaluate(net, x);
    std::vector<double> x_prime = x;
    x_prime[j] = 1.0;
    const Evaluation b = evaluate(net, x_prime);
    if (!visit(x, x_prime, a, b)) return;

    std::size_t i = 0;
    for (; i < box.size(); ++i) {
      if (i == j) continue;
      if (x[i] < box[i].hi) {
        x[i] += 1.0;
        break;
      }
      x[i] = box[i].lo;
    }
    if (i == box.size()) return;
  }
}

ExactFairness enumerate(const Network& net, const DomainSpec& domain, const Box& box,
                        std::uint64_t limit) {
  ExactFairness result;
  result.total_pairs = count_pairs(domain, box, limit);
  for_each_pair(net, domain, box,
                [&](const std::vector<double>& x, const std::vector<double>& x_prime,
                    const Evaluation& a, const Evaluation& b) {
                  if (a.label == b.label) {
                    ++result.fair_pairs;
                  } else {
                    ++result.unfair_pairs;
                    result.violating_pairs.push_back({x, x_prime, a.score, b.score});
                  }
                  return true;
                });
  if (result.fair_pairs + result.unfair_pairs != result.total_pairs) {
    throw Error(ErrorCode::kInternal, "oracle enumeration count mismatch");
  }
  return result;
}

}  // namespace

ExactFairness exhaustive_fairness(const Network& net, const DomainSpec& domain, std::uint64_t limit) {
  return enumerate(net, domain, domain.box(), limit);
}

ExactFairness exhaustive_fairness(const Network& net, const DomainSpec& domain, const Partition& p,
                                  std::uint64_t limit) {
  validate_partition(p, domain);
  return enumerate(net, domain, p.bounds, limit);
}

bool check_partition_fair(const Network& net, const DomainSpec& domain, const Partition& p,
                          std::uint64_t limit) {
  validate_partition(p, domain);
  count_pairs(domain, p.bounds, limit);
  bool fair = true;
  for_each_pair(net, domain, p.bounds,
                [&](const auto&, const auto&, const Evaluation& a, const Evaluation& b) {
                  fair = a.label == b.label;
                  return fair;
                });
  return fair;
}

bool check_partition_unfair(const Network& net, const DomainSpec& domain, const Partition& p,
                            std::uint64_t limit) {
  validate_partition(p, domain);
  count_pairs(domain, p.bounds, limit);
  bool unfair = true;
  for_each_pair(net, domain, p.bounds,
                [&](const auto&, const auto&, const Evaluation& a, const Evaluation& b) {
                  unfair = a.label != b.label;
                  return unfair;
                });
  return unfair;
}

}  // namespace faircert
