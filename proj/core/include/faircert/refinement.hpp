#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <variant>
#include <vector>

#include "faircert/domain.hpp"
#include "faircert/forward_analysis.hpp"
#include "faircert/network.hpp"
#include "faircert/symbolic_interval.hpp"

namespace faircert {

// Interval bound on d(output)/d(x_i) for each input attribute.
using GradientInterval = std::vector<Interval>;

struct RefineConfig {
  int max_refinement_depth = 20;
  int min_sample_depth = 15;
  int samples_per_check = 10;
  std::uint64_t rng_seed = 0;

  // Throws faircert::Error when an invariant is broken.
  void validate() const;
  bool operator==(const RefineConfig&) const = default;
};

using Rng = std::mt19937_64;

// Stream for one partition, fixed by the run seed and the partition lineage,
// so the result does not depend on the order partitions are visited in.
Rng partition_rng(std::uint64_t seed, const Partition& p);
std::uint64_t child_lineage(std::uint64_t parent, bool upper);

struct CounterexamplePair {
  std::vector<double> x;
  std::vector<double> x_prime;
  double score = 0.0;
  double score_prime = 0.0;

  bool operator==(const CounterexamplePair&) const = default;
};

struct Split {
  Partition lower;
  Partition upper;
};
struct StoppedMaxDepth {};
struct StoppedCexFound {
  CounterexamplePair pair;
};
struct StoppedUnsplittable {};

using SplitResult = std::variant<Split, StoppedMaxDepth, StoppedCexFound, StoppedUnsplittable>;

// Seeds the output with [1, 1] and walks the layers backwards, multiplying by
// each hidden neuron's mask interval.
GradientInterval backward_gradient(const Network& net, const ActivationMask& mask);

bool splittable(const AttributeSpec& attribute, const Interval& bounds);

// Smear of every attribute, using the endpoint-wise mean of the two gradients.
// Entries for the protected and unsplittable attributes are reported too.
std::vector<double> smear_values(const GradientInterval& g, const GradientInterval& g_prime,
                                 const Partition& p);

// Highest-smear splittable unprotected attribute; lowest index wins ties.
std::optional<std::size_t> select_split_attribute(const GradientInterval& g,
                                                  const GradientInterval& g_prime,
                                                  const Partition& p, const DomainSpec& domain);

// Real attributes split at the midpoint shared by both halves. Discrete
// attributes give [lb, mid] and [mid + 1, ub] with mid = floor((lb + ub) / 2).
Split bisect(const Partition& p, std::size_t attribute, const DomainSpec& domain);

// Draws up to cfg.samples_per_check points of `p` and returns the first pair
// whose labels differ when the protected attribute is flipped.
std::optional<CounterexamplePair> sampled_cex(const Network& net, const DomainSpec& domain,
                                              const Partition& p, const RefineConfig& cfg,
                                              Rng& rng);

// Stop checks (max depth, then sampled counterexample), otherwise split.
SplitResult backward_refinement(const Network& net, const DomainSpec& domain, const Partition& p,
                                const ForwardOutcome& outcome, const RefineConfig& cfg, Rng& rng);

}  // namespace faircert
