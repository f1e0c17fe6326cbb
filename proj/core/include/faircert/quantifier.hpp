#pragma once

#include "faircert/domain.hpp"
#include "faircert/forward_analysis.hpp"

namespace faircert {

struct RateTriple {
  double certified = 0.0;
  double falsified = 0.0;
  double undecided = 1.0;

  bool operator==(const RateTriple&) const = default;
};

// Number of (x, x') pairs in `p` under uniform weighting: integer and binary
// attributes count grid points, real attributes contribute their width, and
// the protected attribute is left out.
double partition_measure(const Partition& p, const DomainSpec& domain);
double domain_measure(const DomainSpec& domain);
double partition_rate(const Partition& p, const DomainSpec& domain);

// Moves the partition's share out of the undecided rate. Throws
// ErrorCode::kInternal if that drives the undecided rate below zero.
RateTriple quantify(Verdict verdict, const Partition& p, const DomainSpec& domain, RateTriple rates);

// Neumaier summation.
class CompensatedSum {
 public:
  void add(double v) noexcept;
  double value() const noexcept { return sum_ + compensation_; }
  CompensatedSum& operator+=(const CompensatedSum& other) noexcept;

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

// Engine-side accumulator. Sums resolved measures rather than ratios so
// discrete domains stay exact; per-worker accumulators merge by addition.
class RateAccumulator {
 public:
  explicit RateAccumulator(double domain_measure);

  void record(Verdict verdict, double measure);
  void merge(const RateAccumulator& other);
  RateTriple rates() const;

  double domain_measure() const noexcept { return domain_measure_; }

 private:
  double domain_measure_;
  CompensatedSum certified_;
  CompensatedSum falsified_;
};

}  // namespace faircert
