#include "faircert/network.hpp"

#include <cmath>
#include <cstdlib>
#include <utility>

#include "faircert/errors.hpp"
#include "io_util.hpp"
#include "json.hpp"

namespace faircert {

using json = nlohmann::ordered_json;

const char* to_string(Activation activation) {
  return activation == Activation::kRelu ? "relu" : "linear";
}

const char* to_string(Label label) {
  return label == Label::kPositive ? "positive" : "negative";
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "matrix data has " + std::to_string(data_.size()) + " entries, expected " +
                    std::to_string(rows_ * cols_));
  }
}

Network::Network(std::size_t input_dim, std::vector<DenseLayer> layers, double threshold)
    : input_dim_(input_dim), layers_(std::move(layers)), threshold_(threshold) {
  if (input_dim_ == 0) throw Error(ErrorCode::kStructure, "input_dim must be positive");
  if (layers_.empty()) throw Error(ErrorCode::kStructure, "network has no layers");
  if (!std::isfinite(threshold_)) throw Error(ErrorCode::kNonFinite, "threshold is not finite");

  std::size_t expected_in = input_dim_;
  for (std::size_t k = 0; k < layers_.size(); ++k) {
    DenseLayer& layer = layers_[k];
    if (layer.out_dim() == 0) throw Error(ErrorCode::kStructure, "layer has no neurons", k);
    if (layer.in_dim() != expected_in) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "weights have " + std::to_string(layer.in_dim()) + " columns, expected " +
                      std::to_string(expected_in),
                  k);
    }
    if (layer.bias.empty()) layer.bias.assign(layer.out_dim(), 0.0);
    if (layer.bias.size() != layer.out_dim()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "bias has " + std::to_string(layer.bias.size()) + " entries, expected " +
                      std::to_string(layer.out_dim()),
                  k);
    }
    for (double w : layer.weights.data()) {
      if (!std::isfinite(w)) throw Error(ErrorCode::kNonFinite, "non-finite weight", k);
    }
    for (double b : layer.bias) {
      if (!std::isfinite(b)) throw Error(ErrorCode::kNonFinite, "non-finite bias", k);
    }
    const bool last = k + 1 == layers_.size();
    if (last) {
      if (layer.activation != Activation::kLinear) {
        throw Error(ErrorCode::kStructure, "final layer must use linear activation", k);
      }
      if (layer.out_dim() != 1) {
        throw Error(ErrorCode::kStructure, "final layer must have exactly one output neuron", k);
      }
    } else if (layer.activation != Activation::kRelu) {
      throw Error(ErrorCode::kStructure, "hidden layers must use relu activation", k);
    }
    expected_in = layer.out_dim();
  }
}

std::size_t Network::neuron_count() const noexcept {
  std::size_t n = 0;
  for (const auto& layer : layers_) n += layer.out_dim();
  return n;
}

Evaluation evaluate(const Network& net, std::span<const double> x) {
  if (x.size() != net.input_dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "input has " + std::to_string(x.size()) + " entries, network expects " +
                    std::to_string(net.input_dim()));
  }
  std::vector<double> current(x.begin(), x.end());
  std::vector<double> next;
  for (const auto& layer : net.layers()) {
    next.assign(layer.out_dim(), 0.0);
    for (std::size_t r = 0; r < layer.out_dim(); ++r) {
      double sum = layer.bias[r];
      const auto row = layer.weights.row(r);
      for (std::size_t c = 0; c < row.size(); ++c) sum += row[c] * current[c];
      if (layer.activation == Activation::kRelu && sum < 0.0) sum = 0.0;
      next[r] = sum;
    }
    current.swap(next);
  }
  const double score = current.front();
  return {score, net.classify(score)};
}

namespace {

double number_from(const json& value, const char* what, std::size_t layer) {
  if (value.is_number()) return value.get<double>();
  if (value.is_string()) {
    // Accept the textual spellings other tools emit for non-finite floats so
    // they surface as a non-finite error instead of a parse error.
    const std::string text = value.get<std::string>();
    char* end = nullptr;
    const double parsed = std::strtod(text.c_str(), &end);
    if (end != text.c_str() && *end == '\0') return parsed;
  }
  throw Error(ErrorCode::kParse, std::string(what) + " entry is not a number", layer);
}

Activation activation_from(const json& value, std::size_t layer) {
  if (!value.is_string()) throw Error(ErrorCode::kParse, "activation must be a string", layer);
  const std::string name = value.get<std::string>();
  if (name == "relu") return Activation::kRelu;
  if (name == "linear") return Activation::kLinear;
  throw Error(ErrorCode::kStructure, "unsupported activation '" + name + "'", layer);
}

DenseLayer layer_from(const json& node, std::size_t index) {
  if (!node.is_object()) throw Error(ErrorCode::kParse, "layer must be an object", index);
  if (!node.contains("weights") || !node["weights"].is_array()) {
    throw Error(ErrorCode::kParse, "layer is missing a 'weights' array", index);
  }
  const json& rows = node["weights"];
  const std::size_t row_count = rows.size();
  std::size_t col_count = 0;
  std::vector<double> data;
  for (std::size_t r = 0; r < row_count; ++r) {
    if (!rows[r].is_array()) throw Error(ErrorCode::kParse, "weight row must be an array", index);
    if (r == 0) col_count = rows[r].size();
    if (rows[r].size() != col_count) {
      throw Error(ErrorCode::kDimensionMismatch, "ragged weight matrix", index);
    }
    for (const auto& w : rows[r]) data.push_back(number_from(w, "weight", index));
  }

  DenseLayer layer;
  layer.weights = Matrix(row_count, col_count, std::move(data));
  if (node.contains("bias")) {
    if (!node["bias"].is_array()) throw Error(ErrorCode::kParse, "bias must be an array", index);
    for (const auto& b : node["bias"]) layer.bias.push_back(number_from(b, "bias", index));
  }
  layer.activation = node.contains("activation") ? activation_from(node["activation"], index)
                                                 : Activation::kRelu;
  return layer;
}

}  // namespace

Network parse_network(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("invalid network JSON: ") + e.what());
  } catch (const json::out_of_range& e) {
    throw Error(ErrorCode::kNonFinite, std::string("network JSON number out of range: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::kParse, "network file must hold a JSON object");
  if (!doc.contains("input_dim") || !doc["input_dim"].is_number_unsigned()) {
    throw Error(ErrorCode::kParse, "'input_dim' must be a non-negative integer");
  }
  if (!doc.contains("layers") || !doc["layers"].is_array()) {
    throw Error(ErrorCode::kParse, "'layers' must be an array");
  }
  double threshold = 0.0;
  if (doc.contains("threshold")) {
    if (!doc["threshold"].is_number()) throw Error(ErrorCode::kParse, "'threshold' must be a number");
    threshold = doc["threshold"].get<double>();
  }
  std::vector<DenseLayer> layers;
  const json& nodes = doc["layers"];
  for (std::size_t k = 0; k < nodes.size(); ++k) layers.push_back(layer_from(nodes[k], k));
  return Network(doc["input_dim"].get<std::size_t>(), std::move(layers), threshold);
}

Network load_network(const std::filesystem::path& path) {
  return parse_network(detail::read_text_file(path));
}

std::string network_to_json(const Network& net) {
  json doc;
  doc["input_dim"] = net.input_dim();
  doc["threshold"] = net.threshold();
  json layers = json::array();
  for (const auto& layer : net.layers()) {
    json rows = json::array();
    for (std::size_t r = 0; r < layer.out_dim(); ++r) {
      const auto row = layer.weights.row(r);
      rows.push_back(json(std::vector<double>(row.begin(), row.end())));
    }
    layers.push_back({{"weights", std::move(rows)},
                      {"bias", layer.bias},
                      {"activation", to_string(layer.activation)}});
  }
  doc["layers"] = std::move(layers);
  return doc.dump(2) + "\n";
}

void save_network(const Network& net, const std::filesystem::path& path) {
  detail::write_text_file(path, network_to_json(net));
}

}  // namespace faircert
