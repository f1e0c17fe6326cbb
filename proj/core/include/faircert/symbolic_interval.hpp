#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "faircert/domain.hpp"
#include "faircert/network.hpp"

namespace faircert {

// constant + sum_i coeffs[i] * x_i over the input attributes.
struct LinearExpr {
  std::vector<double> coeffs;
  double constant = 0.0;

  static LinearExpr zero(std::size_t input_dim) { return {std::vector<double>(input_dim, 0.0), 0.0}; }
  static LinearExpr variable(std::size_t input_dim, std::size_t index);
  static LinearExpr constant_expr(std::size_t input_dim, double value);

  std::size_t input_dim() const noexcept { return coeffs.size(); }
  double operator()(std::span<const double> x) const;

  LinearExpr& scale(double factor);
  // this += factor * other
  LinearExpr& add_scaled(const LinearExpr& other, double factor);

  bool operator==(const LinearExpr&) const = default;
};

// Pair of linear bounds on one neuron's value over a box.
struct SymbolicInterval {
  LinearExpr lo;
  LinearExpr up;

  static SymbolicInterval exact(LinearExpr e) { return {e, e}; }
  bool operator==(const SymbolicInterval&) const = default;
};

// ReLU behaviour over a box, read as the interval {0}, {1} or [0, 1].
enum class NeuronState { kInactive, kActive, kUnknown };

inline Interval state_interval(NeuronState s) {
  switch (s) {
    case NeuronState::kInactive: return {0.0, 0.0};
    case NeuronState::kActive: return {1.0, 1.0};
    case NeuronState::kUnknown: break;
  }
  return {0.0, 1.0};
}

// One state per neuron, per hidden layer.
using ActivationMask = std::vector<std::vector<NeuronState>>;

// Tight range of `e` over `box` by sign-directed endpoint selection.
Interval concretize(const LinearExpr& e, const Box& box);

std::vector<SymbolicInterval> affine_transform(std::span<const SymbolicInterval> in,
                                               const Matrix& weights,
                                               std::span<const double> bias);

struct ReluRelaxation {
  SymbolicInterval value;
  NeuronState state;
};

// Sound linear relaxation of max(0, z). The pre-activation range takes its
// lower end from `s.lo` and its upper end from `s.up`; straddling neurons get
// slope u / (u - l) on both bounds.
ReluRelaxation relu_relax(const SymbolicInterval& s, const Box& box);

// Input expressions for a box: point-width attributes become constants,
// everything else the identity variable.
std::vector<SymbolicInterval> input_intervals(const Box& box);

}  // namespace faircert
