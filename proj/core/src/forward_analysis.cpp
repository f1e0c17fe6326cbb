#include "faircert/forward_analysis.hpp"

#include <utility>

#include "faircert/errors.hpp"

namespace faircert {

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kFair: return "fair";
    case Verdict::kUnfair: return "unfair";
    case Verdict::kUndecided: return "undecided";
  }
  return "unknown";
}

ForwardPassResult forward_pass(const Network& net, const Box& box) {
  if (box.size() != net.input_dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "box has " + std::to_string(box.size()) + " attributes, network expects " +
                    std::to_string(net.input_dim()));
  }
  ForwardPassResult result;
  std::vector<SymbolicInterval> current = input_intervals(box);
  for (const auto& layer : net.layers()) {
    std::vector<SymbolicInterval> pre = affine_transform(current, layer.weights, layer.bias);
    if (layer.activation == Activation::kRelu) {
      std::vector<NeuronState>& states = result.masks.emplace_back();
      states.reserve(pre.size());
      for (auto& s : pre) {
        ReluRelaxation relaxed = relu_relax(s, box);
        states.push_back(relaxed.state);
        s = std::move(relaxed.value);
      }
    }
    current = std::move(pre);
  }
  result.output = std::move(current.front());
  result.concrete = {concretize(result.output.lo, box).lo, concretize(result.output.up, box).hi};
  return result;
}

Verdict classify_outputs(const Interval& out, const Interval& out_prime, double threshold) {
  const bool pos = out.lo > threshold;
  const bool neg = out.hi < threshold;
  const bool pos_prime = out_prime.lo > threshold;
  const bool neg_prime = out_prime.hi < threshold;
  if ((pos && pos_prime) || (neg && neg_prime)) return Verdict::kFair;
  if ((pos && neg_prime) || (neg && pos_prime)) return Verdict::kUnfair;
  return Verdict::kUndecided;
}

Box fix_protected(const Box& box, std::size_t protected_index, double value) {
  Box fixed = box;
  fixed.at(protected_index) = {value, value};
  return fixed;
}

ForwardOutcome symbolic_forward(const Network& net, std::size_t protected_index, const Partition& p) {
  ForwardPassResult first = forward_pass(net, fix_protected(p.bounds, protected_index, 0.0));
  ForwardPassResult second = forward_pass(net, fix_protected(p.bounds, protected_index, 1.0));
  ForwardOutcome outcome;
  outcome.out = first.concrete;
  outcome.out_prime = second.concrete;
  outcome.verdict = classify_outputs(outcome.out, outcome.out_prime, net.threshold());
  outcome.masks = std::move(first.masks);
  outcome.masks_prime = std::move(second.masks);
  return outcome;
}

}  // namespace faircert
