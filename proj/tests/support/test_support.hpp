#pragma once

#include <cstddef>
#include <filesystem>
#include <random>
#include <vector>

#include "faircert/domain.hpp"
#include "faircert/network.hpp"

namespace faircert::testing {

std::filesystem::path data_path(const std::string& name);

// Three inputs (x1, protected x2, x3), two relu neurons, one linear output.
Network running_example_network();
// x1 integer [1,5], x2 binary protected, x3 integer [0,5].
DomainSpec running_example_domain();

// Copy of the root partition with attribute `i` narrowed to [lo, hi].
Partition narrowed(const DomainSpec& domain, std::size_t i, double lo, double hi);

// Single input x0 (protected), o = weight * x0 + bias.
Network protected_only_network(double weight, double bias);
DomainSpec protected_only_domain();

// Input-agnostic network whose output is `value` everywhere.
Network constant_network(std::size_t input_dim, double value);

struct RandomNetworkOptions {
  std::size_t input_dim = 3;
  std::size_t min_hidden_layers = 1;
  std::size_t max_hidden_layers = 3;
  std::size_t max_width = 16;
  double weight_range = 2.0;
};

Network random_network(std::mt19937_64& rng, const RandomNetworkOptions& opts);

struct RandomDomainOptions {
  std::size_t max_unprotected = 4;
  int max_values = 8;
  bool allow_real = false;
};

DomainSpec random_discrete_domain(std::mt19937_64& rng, const RandomDomainOptions& opts);

// Uniform point inside `box`, honouring discrete attributes.
std::vector<double> sample_point(std::mt19937_64& rng, const DomainSpec& domain, const Box& box);

}  // namespace faircert::testing
