#pragma once

#include <cstddef>

#include "faircert/domain.hpp"
#include "faircert/network.hpp"
#include "faircert/symbolic_interval.hpp"

namespace faircert {

struct ForwardPassResult {
  SymbolicInterval output;
  Interval concrete;
  ActivationMask masks;
};

// Layer-by-layer symbolic propagation of `box` through `net`.
ForwardPassResult forward_pass(const Network& net, const Box& box);

enum class Verdict { kFair, kUnfair, kUndecided };

const char* to_string(Verdict verdict);

// Decides fairness from the two output ranges. Every comparison against the
// threshold is strict, so an endpoint sitting on the threshold is undecided.
Verdict classify_outputs(const Interval& out, const Interval& out_prime, double threshold);

struct ForwardOutcome {
  Verdict verdict = Verdict::kUndecided;
  Interval out;        // protected attribute fixed to 0
  Interval out_prime;  // protected attribute fixed to 1
  ActivationMask masks;
  ActivationMask masks_prime;
};

// `box` with the protected attribute collapsed to the point `value`.
Box fix_protected(const Box& box, std::size_t protected_index, double value);

ForwardOutcome symbolic_forward(const Network& net, std::size_t protected_index, const Partition& p);

}  // namespace faircert
