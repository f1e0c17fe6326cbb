#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace faircert {

enum class Activation { kRelu, kLinear };

const char* to_string(Activation activation);

// Row-major dense matrix. Row r holds the incoming weights of output neuron r.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  const std::vector<double>& data() const noexcept { return data_; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

struct DenseLayer {
  Matrix weights;
  std::vector<double> bias;
  Activation activation = Activation::kRelu;

  std::size_t in_dim() const noexcept { return weights.cols(); }
  std::size_t out_dim() const noexcept { return weights.rows(); }

  bool operator==(const DenseLayer&) const = default;
};

enum class Label { kNegative, kPositive };

const char* to_string(Label label);

struct Evaluation {
  double score = 0.0;
  Label label = Label::kNegative;
};

// Feedforward classifier: relu hidden layers followed by a single linear
// output neuron. An input is labelled positive iff score > threshold.
class Network {
 public:
  // Validates every structural invariant; throws faircert::Error on violation.
  Network(std::size_t input_dim, std::vector<DenseLayer> layers, double threshold = 0.0);

  std::size_t input_dim() const noexcept { return input_dim_; }
  double threshold() const noexcept { return threshold_; }
  const std::vector<DenseLayer>& layers() const noexcept { return layers_; }
  std::size_t hidden_layer_count() const noexcept { return layers_.size() - 1; }
  std::size_t neuron_count() const noexcept;

  Label classify(double score) const noexcept {
    return score > threshold_ ? Label::kPositive : Label::kNegative;
  }

  bool operator==(const Network&) const = default;

 private:
  std::size_t input_dim_;
  std::vector<DenseLayer> layers_;
  double threshold_;
};

Evaluation evaluate(const Network& net, std::span<const double> x);

// Network file: {"input_dim", "threshold", "layers": [{"weights", "bias", "activation"}]}.
// "threshold" and "bias" are optional and default to zero.
Network parse_network(std::string_view json_text);
Network load_network(const std::filesystem::path& path);
std::string network_to_json(const Network& net);
void save_network(const Network& net, const std::filesystem::path& path);

}  // namespace faircert
