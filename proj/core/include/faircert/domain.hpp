#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace faircert {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double width() const noexcept { return hi - lo; }
  bool contains(double v) const noexcept { return lo <= v && v <= hi; }
  bool operator==(const Interval&) const = default;
};

// Axis-aligned box, one interval per input attribute.
using Box = std::vector<Interval>;

enum class AttributeKind { kInteger, kReal, kBinary };

const char* to_string(AttributeKind kind);

struct AttributeSpec {
  std::string name;
  AttributeKind kind = AttributeKind::kReal;
  double lb = 0.0;
  double ub = 0.0;

  // Integer and binary attributes live on the unit grid.
  bool discrete() const noexcept { return kind != AttributeKind::kReal; }
  bool operator==(const AttributeSpec&) const = default;
};

// Input domain with exactly one binary protected attribute.
class DomainSpec {
 public:
  DomainSpec(std::vector<AttributeSpec> attributes, std::size_t protected_index);

  const std::vector<AttributeSpec>& attributes() const noexcept { return attributes_; }
  const AttributeSpec& attribute(std::size_t i) const { return attributes_.at(i); }
  std::size_t size() const noexcept { return attributes_.size(); }
  std::size_t protected_index() const noexcept { return protected_index_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  bool all_discrete() const noexcept;

  Box box() const;

  // Same attributes with the protected attribute moved to `name`.
  DomainSpec with_protected(std::string_view name) const;

  bool operator==(const DomainSpec&) const = default;

 private:
  std::vector<AttributeSpec> attributes_;
  std::size_t protected_index_;
};

// Sub-box of the domain produced by repeated bisection. `lineage` identifies
// the path from the root and seeds per-partition random streams.
struct Partition {
  Box bounds;
  int depth = 0;
  std::uint64_t lineage = kRootLineage;

  static constexpr std::uint64_t kRootLineage = 0x9e3779b97f4a7c15ULL;

  bool operator==(const Partition&) const = default;
};

Partition root_partition(const DomainSpec& domain);

// Checks the partition invariants against `domain`; throws faircert::Error.
void validate_partition(const Partition& p, const DomainSpec& domain);

// Domain file: {"attributes": [{"name", "kind", "lb", "ub"}], "protected": "<name>"}.
DomainSpec parse_domain(std::string_view json_text);
DomainSpec load_domain(const std::filesystem::path& path);
std::string domain_to_json(const DomainSpec& domain);

}  // namespace faircert
