#include "faircert/quantifier.hpp"

#include <cmath>

#include "faircert/errors.hpp"

namespace faircert {

namespace {

constexpr double kRateSlack = 1e-9;

double attribute_measure(const AttributeSpec& a, const Interval& b) {
  return a.discrete() ? b.hi - b.lo + 1.0 : b.hi - b.lo;
}

}  // namespace

double partition_measure(const Partition& p, const DomainSpec& domain) {
  double measure = 1.0;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (i == domain.protected_index()) continue;
    measure *= attribute_measure(domain.attribute(i), p.bounds[i]);
  }
  return measure;
}

double domain_measure(const DomainSpec& domain) {
  return partition_measure(root_partition(domain), domain);
}

double partition_rate(const Partition& p, const DomainSpec& domain) {
  return partition_measure(p, domain) / domain_measure(domain);
}

RateTriple quantify(Verdict verdict, const Partition& p, const DomainSpec& domain, RateTriple rates) {
  if (verdict == Verdict::kUndecided) return rates;
  const double r = partition_rate(p, domain);
  if (verdict == Verdict::kFair) {
    rates.certified += r;
  } else {
    rates.falsified += r;
  }
  rates.undecided -= r;
  if (rates.undecided < -kRateSlack) {
    throw Error(ErrorCode::kInternal, "undecided rate went negative; a partition was counted twice");
  }
  return rates;
}

void CompensatedSum::add(double v) noexcept {
  const double t = sum_ + v;
  if (std::abs(sum_) >= std::abs(v)) {
    compensation_ += (sum_ - t) + v;
  } else {
    compensation_ += (v - t) + sum_;
  }
  sum_ = t;
}

CompensatedSum& CompensatedSum::operator+=(const CompensatedSum& other) noexcept {
  add(other.sum_);
  add(other.compensation_);
  return *this;
}

RateAccumulator::RateAccumulator(double domain_measure) : domain_measure_(domain_measure) {
  if (!(domain_measure_ > 0.0) || !std::isfinite(domain_measure_)) {
    throw Error(ErrorCode::kInvalidDomain, "domain measure must be positive and finite");
  }
}

void RateAccumulator::record(Verdict verdict, double measure) {
  if (verdict == Verdict::kFair) {
    certified_.add(measure);
  } else if (verdict == Verdict::kUnfair) {
    falsified_.add(measure);
  } else {
    return;
  }
  const double resolved = certified_.value() + falsified_.value();
  if (resolved > domain_measure_ * (1.0 + kRateSlack)) {
    throw Error(ErrorCode::kInternal, "resolved measure exceeds the domain; a partition was counted twice");
  }
}

void RateAccumulator::merge(const RateAccumulator& other) {
  certified_ += other.certified_;
  falsified_ += other.falsified_;
}

RateTriple RateAccumulator::rates() const {
  CompensatedSum undecided;
  undecided.add(domain_measure_);
  undecided.add(-certified_.value());
  undecided.add(-falsified_.value());
  RateTriple r;
  r.certified = certified_.value() / domain_measure_;
  r.falsified = falsified_.value() / domain_measure_;
  r.undecided = undecided.value() / domain_measure_;
  if (r.undecided < 0.0 && r.undecided > -kRateSlack) r.undecided = 0.0;
  return r;
}

}  // namespace faircert
