#include "faircert/refinement.hpp"

#include <algorithm>
#include <cmath>

#include "faircert/errors.hpp"

namespace faircert {

namespace {

constexpr double kMinRealWidth = 1e-9;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Interval scale(const Interval& g, double w) {
  const double a = w * g.lo;
  const double b = w * g.hi;
  return {std::min(a, b), std::max(a, b)};
}

Interval multiply(const Interval& a, const Interval& b) {
  const double p[] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(std::begin(p), std::end(p)), *std::max_element(std::begin(p), std::end(p))};
}

double draw(const AttributeSpec& attribute, const Interval& bounds, Rng& rng) {
  if (attribute.discrete()) {
    std::uniform_int_distribution<long long> dist(std::llround(bounds.lo), std::llround(bounds.hi));
    return static_cast<double>(dist(rng));
  }
  if (bounds.lo == bounds.hi) return bounds.lo;
  std::uniform_real_distribution<double> dist(bounds.lo, bounds.hi);
  return dist(rng);
}

}  // namespace

void RefineConfig::validate() const {
  if (max_refinement_depth < 0) throw Error(ErrorCode::kInvalidArgument, "max_refinement_depth must be >= 0");
  if (min_sample_depth < 0) throw Error(ErrorCode::kInvalidArgument, "min_sample_depth must be >= 0");
  if (min_sample_depth > max_refinement_depth) {
    throw Error(ErrorCode::kInvalidArgument, "min_sample_depth must not exceed max_refinement_depth");
  }
  if (samples_per_check < 0) throw Error(ErrorCode::kInvalidArgument, "samples_per_check must be >= 0");
}

std::uint64_t child_lineage(std::uint64_t parent, bool upper) {
  return splitmix64(parent * 2 + (upper ? 1 : 0));
}

Rng partition_rng(std::uint64_t seed, const Partition& p) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(p.lineage), static_cast<std::uint32_t>(p.lineage >> 32)};
  return Rng(seq);
}

GradientInterval backward_gradient(const Network& net, const ActivationMask& mask) {
  if (mask.size() != net.hidden_layer_count()) {
    throw Error(ErrorCode::kDimensionMismatch, "mask table does not cover every hidden layer");
  }
  const auto& layers = net.layers();
  std::vector<Interval> upstream{{1.0, 1.0}};
  for (std::size_t k = layers.size(); k-- > 0;) {
    const DenseLayer& layer = layers[k];
    if (layer.activation == Activation::kRelu) {
      const auto& states = mask[k];
      if (states.size() != layer.out_dim()) {
        throw Error(ErrorCode::kDimensionMismatch, "mask width differs from layer width", k);
      }
      for (std::size_t n = 0; n < upstream.size(); ++n) {
        upstream[n] = multiply(state_interval(states[n]), upstream[n]);
      }
    }
    std::vector<Interval> below(layer.in_dim(), Interval{0.0, 0.0});
    for (std::size_t r = 0; r < layer.out_dim(); ++r) {
      const auto row = layer.weights.row(r);
      for (std::size_t c = 0; c < row.size(); ++c) {
        const Interval term = scale(upstream[r], row[c]);
        below[c].lo += term.lo;
        below[c].hi += term.hi;
      }
    }
    upstream = std::move(below);
  }
  return upstream;
}

bool splittable(const AttributeSpec& attribute, const Interval& bounds) {
  if (attribute.discrete()) return bounds.hi > bounds.lo;
  return bounds.hi - bounds.lo > kMinRealWidth;
}

std::vector<double> smear_values(const GradientInterval& g, const GradientInterval& g_prime,
                                 const Partition& p) {
  std::vector<double> smear(p.bounds.size(), 0.0);
  for (std::size_t i = 0; i < smear.size(); ++i) {
    const double lo = (g[i].lo + g_prime[i].lo) / 2.0;
    const double hi = (g[i].hi + g_prime[i].hi) / 2.0;
    smear[i] = std::max(std::abs(lo), std::abs(hi)) * p.bounds[i].width();
  }
  return smear;
}

std::optional<std::size_t> select_split_attribute(const GradientInterval& g,
                                                  const GradientInterval& g_prime,
                                                  const Partition& p, const DomainSpec& domain) {
  const std::vector<double> smear = smear_values(g, g_prime, p);
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < smear.size(); ++i) {
    if (i == domain.protected_index() || !splittable(domain.attribute(i), p.bounds[i])) continue;
    if (!best || smear[i] > smear[*best]) best = i;
  }
  return best;
}

Split bisect(const Partition& p, std::size_t attribute, const DomainSpec& domain) {
  if (attribute >= domain.size()) throw Error(ErrorCode::kInvalidArgument, "attribute index out of range");
  if (attribute == domain.protected_index()) {
    throw Error(ErrorCode::kInvalidArgument, "the protected attribute is never split");
  }
  const AttributeSpec& spec = domain.attribute(attribute);
  const Interval b = p.bounds[attribute];
  if (!splittable(spec, b)) {
    throw Error(ErrorCode::kInvalidArgument, "attribute '" + spec.name + "' is not splittable");
  }
  Split split{p, p};
  split.lower.depth = split.upper.depth = p.depth + 1;
  split.lower.lineage = child_lineage(p.lineage, false);
  split.upper.lineage = child_lineage(p.lineage, true);
  if (spec.discrete()) {
    const double mid = std::floor((b.lo + b.hi) / 2.0);
    split.lower.bounds[attribute] = {b.lo, mid};
    split.upper.bounds[attribute] = {mid + 1.0, b.hi};
  } else {
    const double mid = (b.lo + b.hi) / 2.0;
    split.lower.bounds[attribute] = {b.lo, mid};
    split.upper.bounds[attribute] = {mid, b.hi};
  }
  return split;
}

std::optional<CounterexamplePair> sampled_cex(const Network& net, const DomainSpec& domain,
                                              const Partition& p, const RefineConfig& cfg,
                                              Rng& rng) {
  const std::size_t j = domain.protected_index();
  std::bernoulli_distribution coin(0.5);
  std::vector<double> x(p.bounds.size());
  for (int s = 0; s < cfg.samples_per_check; ++s) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      x[i] = i == j ? 0.0 : draw(domain.attribute(i), p.bounds[i], rng);
    }
    x[j] = coin(rng) ? 1.0 : 0.0;
    std::vector<double> x_prime = x;
    x_prime[j] = 1.0 - x[j];
    const Evaluation a = evaluate(net, x);
    const Evaluation b = evaluate(net, x_prime);
    if (a.label != b.label) return CounterexamplePair{x, std::move(x_prime), a.score, b.score};
  }
  return std::nullopt;
}

SplitResult backward_refinement(const Network& net, const DomainSpec& domain, const Partition& p,
                                const ForwardOutcome& outcome, const RefineConfig& cfg, Rng& rng) {
  if (p.depth >= cfg.max_refinement_depth) return StoppedMaxDepth{};
  if (p.depth >= cfg.min_sample_depth) {
    if (auto pair = sampled_cex(net, domain, p, cfg, rng)) return StoppedCexFound{std::move(*pair)};
  }
  const GradientInterval g = backward_gradient(net, outcome.masks);
  const GradientInterval g_prime = backward_gradient(net, outcome.masks_prime);
  const auto attribute = select_split_attribute(g, g_prime, p, domain);
  if (!attribute) return StoppedUnsplittable{};
  return bisect(p, *attribute, domain);
}

}  // namespace faircert
