#include "faircert/symbolic_interval.hpp"

#include "faircert/errors.hpp"

namespace faircert {

LinearExpr LinearExpr::variable(std::size_t input_dim, std::size_t index) {
  LinearExpr e = zero(input_dim);
  e.coeffs.at(index) = 1.0;
  return e;
}

LinearExpr LinearExpr::constant_expr(std::size_t input_dim, double value) {
  LinearExpr e = zero(input_dim);
  e.constant = value;
  return e;
}

double LinearExpr::operator()(std::span<const double> x) const {
  double sum = constant;
  for (std::size_t i = 0; i < coeffs.size(); ++i) sum += coeffs[i] * x[i];
  return sum;
}

LinearExpr& LinearExpr::scale(double factor) {
  for (double& c : coeffs) c *= factor;
  constant *= factor;
  return *this;
}

LinearExpr& LinearExpr::add_scaled(const LinearExpr& other, double factor) {
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += factor * other.coeffs[i];
  constant += factor * other.constant;
  return *this;
}

Interval concretize(const LinearExpr& e, const Box& box) {
  double lo = e.constant;
  double hi = e.constant;
  for (std::size_t i = 0; i < e.coeffs.size(); ++i) {
    const double c = e.coeffs[i];
    if (c > 0.0) {
      lo += c * box[i].lo;
      hi += c * box[i].hi;
    } else if (c < 0.0) {
      lo += c * box[i].hi;
      hi += c * box[i].lo;
    }
  }
  return {lo, hi};
}

std::vector<SymbolicInterval> affine_transform(std::span<const SymbolicInterval> in,
                                               const Matrix& weights,
                                               std::span<const double> bias) {
  if (weights.cols() != in.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "affine transform expects " + std::to_string(weights.cols()) + " inputs, got " +
                    std::to_string(in.size()));
  }
  if (bias.size() != weights.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "bias length differs from weight rows");
  }
  const std::size_t dim = in.empty() ? 0 : in.front().lo.input_dim();
  std::vector<SymbolicInterval> out;
  out.reserve(weights.rows());
  for (std::size_t k = 0; k < weights.rows(); ++k) {
    SymbolicInterval s{LinearExpr::constant_expr(dim, bias[k]), LinearExpr::constant_expr(dim, bias[k])};
    const auto row = weights.row(k);
    for (std::size_t j = 0; j < row.size(); ++j) {
      const double w = row[j];
      if (w > 0.0) {
        s.lo.add_scaled(in[j].lo, w);
        s.up.add_scaled(in[j].up, w);
      } else if (w < 0.0) {
        s.lo.add_scaled(in[j].up, w);
        s.up.add_scaled(in[j].lo, w);
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

ReluRelaxation relu_relax(const SymbolicInterval& s, const Box& box) {
  const double l = concretize(s.lo, box).lo;
  const double u = concretize(s.up, box).hi;
  const std::size_t dim = s.lo.input_dim();
  if (u <= 0.0) {
    return {{LinearExpr::zero(dim), LinearExpr::zero(dim)}, NeuronState::kInactive};
  }
  if (l >= 0.0) return {s, NeuronState::kActive};

  // l < 0 < u here, so u - l > 0.
  const double slope = u / (u - l);
  SymbolicInterval relaxed = s;
  relaxed.lo.scale(slope);
  relaxed.up.scale(slope);
  relaxed.up.constant -= slope * l;
  return {std::move(relaxed), NeuronState::kUnknown};
}

std::vector<SymbolicInterval> input_intervals(const Box& box) {
  const std::size_t dim = box.size();
  std::vector<SymbolicInterval> in;
  in.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    in.push_back(SymbolicInterval::exact(box[i].lo == box[i].hi
                                             ? LinearExpr::constant_expr(dim, box[i].lo)
                                             : LinearExpr::variable(dim, i)));
  }
  return in;
}

}  // namespace faircert
