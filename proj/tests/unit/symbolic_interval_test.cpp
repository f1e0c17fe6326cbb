#include "faircert/symbolic_interval.hpp"

#include <gtest/gtest.h>

#include <random>

#include "faircert/errors.hpp"
#include "faircert/forward_analysis.hpp"
#include "test_support.hpp"

namespace faircert {
namespace {

// x1 in [1,5], x2 = 0, x3 in [0,5]
Box running_box(double x2 = 0.0) { return {{1, 5}, {x2, x2}, {0, 5}}; }

LinearExpr expr(std::vector<double> coeffs, double constant) { return {std::move(coeffs), constant}; }

TEST(Concretize, RunningExampleHiddenNeurons) {
  const Interval h1 = concretize(expr({2.0, 0.0, 1.2}, 0.0), running_box());
  EXPECT_DOUBLE_EQ(h1.lo, 2.0);
  EXPECT_DOUBLE_EQ(h1.hi, 16.0);

  const Interval h2_prime = concretize(expr({-0.2, 0.0, 0.4}, 0.7), running_box());
  EXPECT_NEAR(h2_prime.lo, -0.3, 1e-12);
  EXPECT_NEAR(h2_prime.hi, 2.5, 1e-12);
}

TEST(Concretize, ZeroExpression) {
  const Interval z = concretize(LinearExpr::zero(3), running_box());
  EXPECT_EQ(z, (Interval{0.0, 0.0}));
}

TEST(Concretize, BracketsSampledValues) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coef(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    Box box(4);
    LinearExpr e = LinearExpr::zero(4);
    for (std::size_t i = 0; i < 4; ++i) {
      const double a = coef(rng), b = coef(rng);
      box[i] = {std::min(a, b), std::max(a, b)};
      e.coeffs[i] = coef(rng);
    }
    e.constant = coef(rng);
    const Interval range = concretize(e, box);
    for (int s = 0; s < 50; ++s) {
      std::vector<double> x(4);
      for (std::size_t i = 0; i < 4; ++i) x[i] = std::uniform_real_distribution<double>(box[i].lo, box[i].hi)(rng);
      const double v = e(x);
      ASSERT_LE(range.lo, v + 1e-12);
      ASSERT_GE(range.hi, v - 1e-12);
    }
  }
}

TEST(AffineTransform, RunningExampleFirstLayer) {
  const Network net = testing::running_example_network();
  const auto& layer = net.layers()[0];

  const auto free_inputs = input_intervals({{1, 5}, {0, 1}, {0, 5}});
  const auto out = affine_transform(free_inputs, layer.weights, layer.bias);
  EXPECT_EQ(out[0].lo, expr({2.0, 0.5, 1.2}, 0.0));
  EXPECT_EQ(out[0].up, out[0].lo);

  // Protected attribute pinned to 0 drops out of the expression.
  const auto pinned = affine_transform(input_intervals(running_box(0.0)), layer.weights, layer.bias);
  EXPECT_EQ(pinned[0].lo, expr({2.0, 0.0, 1.2}, 0.0));
  const auto pinned_one = affine_transform(input_intervals(running_box(1.0)), layer.weights, layer.bias);
  EXPECT_EQ(pinned_one[0].lo, expr({2.0, 0.0, 1.2}, 0.5));
  EXPECT_NEAR(pinned_one[1].up.constant, 0.7, 1e-15);
}

TEST(AffineTransform, OutputLayerOverRelaxedNeurons) {
  const Network net = testing::running_example_network();
  const Box box = running_box();
  auto hidden = affine_transform(input_intervals(box), net.layers()[0].weights, net.layers()[0].bias);
  for (auto& s : hidden) s = relu_relax(s, box).value;
  const auto out = affine_transform(hidden, net.layers()[1].weights, net.layers()[1].bias);
  EXPECT_NEAR(out[0].up.coeffs[0], 0.528, 1e-3);
  EXPECT_NEAR(out[0].up.coeffs[2], -0.017, 1e-3);
  EXPECT_NEAR(out[0].up.constant, 0.0, 1e-12);
  EXPECT_NEAR(out[0].lo.coeffs[0], 0.528, 1e-3);
  EXPECT_NEAR(out[0].lo.coeffs[2], -0.017, 1e-3);
  EXPECT_NEAR(out[0].lo.constant, -0.643, 1e-3);
}

TEST(AffineTransform, IdentityKeepsIntervals) {
  const auto in = input_intervals({{0, 1}, {2, 3}});
  const auto out = affine_transform(in, Matrix(2, 2, {1, 0, 0, 1}), std::vector<double>{0, 0});
  EXPECT_EQ(out[0], in[0]);
  EXPECT_EQ(out[1], in[1]);
}

TEST(AffineTransform, DimensionMismatch) {
  const auto in = input_intervals({{0, 1}, {2, 3}});
  EXPECT_THROW(affine_transform(in, Matrix(1, 3), std::vector<double>{0}), Error);
}

TEST(ReluRelax, StraddlingNeuron) {
  const SymbolicInterval s = SymbolicInterval::exact(expr({-0.2, 0.0, 0.4}, 0.0));
  const ReluRelaxation r = relu_relax(s, running_box());
  EXPECT_EQ(r.state, NeuronState::kUnknown);
  const double slope = 9.0 / 14.0;
  EXPECT_NEAR(r.value.lo.coeffs[0], -0.2 * slope, 1e-15);
  EXPECT_NEAR(r.value.lo.coeffs[2], 0.4 * slope, 1e-15);
  EXPECT_NEAR(r.value.lo.coeffs[0], -0.1286, 1e-4);
  EXPECT_NEAR(r.value.lo.coeffs[2], 0.2571, 1e-4);
  EXPECT_EQ(r.value.lo.constant, 0.0);
  EXPECT_EQ(r.value.up.coeffs, r.value.lo.coeffs);
  EXPECT_NEAR(r.value.up.constant, 0.6429, 1e-4);
}

TEST(ReluRelax, ActiveAndInactive) {
  const SymbolicInterval active = SymbolicInterval::exact(expr({2.0, 0.0, 1.2}, 0.0));
  const ReluRelaxation a = relu_relax(active, running_box());
  EXPECT_EQ(a.state, NeuronState::kActive);
  EXPECT_EQ(a.value, active);

  // Range [-5, -1] over x1 in [1,5].
  const SymbolicInterval dead = SymbolicInterval::exact(expr({-1.0, 0.0, 0.0}, 0.0));
  const ReluRelaxation d = relu_relax(dead, running_box());
  EXPECT_EQ(d.state, NeuronState::kInactive);
  EXPECT_EQ(d.value.lo, LinearExpr::zero(3));
  EXPECT_EQ(d.value.up, LinearExpr::zero(3));
}

TEST(ReluRelax, RelaxationDominatesRelu) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> neg(-10, -1e-6), pos(1e-6, 10), unit(0, 1);
  for (int trial = 0; trial < 10000; ++trial) {
    const double l = neg(rng), u = pos(rng);
    const double z = l + unit(rng) * (u - l);
    const double slope = u / (u - l);
    const double relu = std::max(0.0, z);
    ASSERT_LE(slope * z, relu + 1e-12);
    ASSERT_GE(slope * (z - l), relu - 1e-12);
  }
}

TEST(ReluRelax, SoundOnSampledPoints) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coef(-2, 2);
  for (int trial = 0; trial < 500; ++trial) {
    const Box box{{-1, 2}, {0, 3}};
    SymbolicInterval s{expr({coef(rng), coef(rng)}, coef(rng)), {}};
    s.up = s.lo;
    s.up.constant += std::abs(coef(rng));
    const ReluRelaxation r = relu_relax(s, box);
    for (int k = 0; k < 50; ++k) {
      const std::vector<double> x{std::uniform_real_distribution<double>(-1, 2)(rng),
                                  std::uniform_real_distribution<double>(0, 3)(rng)};
      const double z_lo = s.lo(x), z_up = s.up(x);
      for (double z : {z_lo, z_up, (z_lo + z_up) / 2}) {
        const double relu = std::max(0.0, z);
        ASSERT_LE(r.value.lo(x), relu + 1e-9);
        ASSERT_GE(r.value.up(x), relu - 1e-9);
      }
    }
  }
}

}  // namespace
}  // namespace faircert
