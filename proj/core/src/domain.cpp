#include "faircert/domain.hpp"

#include <cmath>
#include <utility>

#include "faircert/errors.hpp"
#include "io_util.hpp"
#include "json.hpp"

namespace faircert {

using json = nlohmann::ordered_json;

const char* to_string(AttributeKind kind) {
  switch (kind) {
    case AttributeKind::kInteger: return "integer";
    case AttributeKind::kReal: return "real";
    case AttributeKind::kBinary: return "binary";
  }
  return "unknown";
}

namespace {

bool is_whole(double v) { return std::isfinite(v) && std::floor(v) == v; }

void validate_attribute(const AttributeSpec& a) {
  const std::string who = "attribute '" + a.name + "'";
  if (a.name.empty()) throw Error(ErrorCode::kInvalidDomain, "attribute name is empty");
  if (!std::isfinite(a.lb) || !std::isfinite(a.ub)) {
    throw Error(ErrorCode::kInvalidDomain, who + " has non-finite bounds");
  }
  if (a.lb > a.ub) throw Error(ErrorCode::kInvalidDomain, who + " has lb > ub");
  switch (a.kind) {
    case AttributeKind::kBinary:
      if (a.lb != 0.0 || a.ub != 1.0) {
        throw Error(ErrorCode::kInvalidDomain, who + " is binary but bounds are not [0, 1]");
      }
      break;
    case AttributeKind::kInteger:
      if (!is_whole(a.lb) || !is_whole(a.ub)) {
        throw Error(ErrorCode::kInvalidDomain, who + " is integer but bounds are not whole");
      }
      break;
    case AttributeKind::kReal:
      // A zero-width real attribute has zero measure and would make every rate 0/0.
      if (a.lb == a.ub) {
        throw Error(ErrorCode::kInvalidDomain,
                    who + " is real with zero width; declare it integer to pin a constant");
      }
      break;
  }
}

AttributeKind kind_from(const std::string& name) {
  if (name == "integer") return AttributeKind::kInteger;
  if (name == "real") return AttributeKind::kReal;
  if (name == "binary") return AttributeKind::kBinary;
  throw Error(ErrorCode::kParse, "unknown attribute kind '" + name + "'");
}

}  // namespace

DomainSpec::DomainSpec(std::vector<AttributeSpec> attributes, std::size_t protected_index)
    : attributes_(std::move(attributes)), protected_index_(protected_index) {
  if (attributes_.empty()) throw Error(ErrorCode::kInvalidDomain, "domain has no attributes");
  for (std::size_t i = 0; i < attributes_.size(); ++i) {
    validate_attribute(attributes_[i]);
    for (std::size_t k = 0; k < i; ++k) {
      if (attributes_[k].name == attributes_[i].name) {
        throw Error(ErrorCode::kInvalidDomain, "duplicate attribute '" + attributes_[i].name + "'");
      }
    }
  }
  if (protected_index_ >= attributes_.size()) {
    throw Error(ErrorCode::kUnknownProtected, "protected index out of range");
  }
  if (attributes_[protected_index_].kind != AttributeKind::kBinary) {
    throw Error(ErrorCode::kInvalidDomain,
                "protected attribute '" + attributes_[protected_index_].name + "' must be binary");
  }
}

std::optional<std::size_t> DomainSpec::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < attributes_.size(); ++i) {
    if (attributes_[i].name == name) return i;
  }
  return std::nullopt;
}

bool DomainSpec::all_discrete() const noexcept {
  for (const auto& a : attributes_) {
    if (!a.discrete()) return false;
  }
  return true;
}

Box DomainSpec::box() const {
  Box b;
  b.reserve(attributes_.size());
  for (const auto& a : attributes_) b.push_back({a.lb, a.ub});
  return b;
}

DomainSpec DomainSpec::with_protected(std::string_view name) const {
  const auto idx = index_of(name);
  if (!idx) throw Error(ErrorCode::kUnknownProtected, "unknown protected attribute '" + std::string(name) + "'");
  return DomainSpec(attributes_, *idx);
}

Partition root_partition(const DomainSpec& domain) {
  return Partition{domain.box(), 0, Partition::kRootLineage};
}

void validate_partition(const Partition& p, const DomainSpec& domain) {
  if (p.bounds.size() != domain.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "partition arity differs from domain");
  }
  if (p.depth < 0) throw Error(ErrorCode::kInvalidArgument, "partition depth is negative");
  for (std::size_t i = 0; i < domain.size(); ++i) {
    const auto& a = domain.attribute(i);
    const auto& b = p.bounds[i];
    if (!(b.lo <= b.hi) || b.lo < a.lb || b.hi > a.ub) {
      throw Error(ErrorCode::kInvalidArgument,
                  "partition bounds for '" + a.name + "' leave the domain");
    }
  }
  const auto& prot = p.bounds[domain.protected_index()];
  if (prot.lo != 0.0 || prot.hi != 1.0) {
    throw Error(ErrorCode::kInvalidArgument, "protected attribute must span [0, 1]");
  }
}

DomainSpec parse_domain(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("invalid domain JSON: ") + e.what());
  } catch (const json::out_of_range& e) {
    throw Error(ErrorCode::kNonFinite, std::string("domain JSON number out of range: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("attributes") || !doc["attributes"].is_array()) {
    throw Error(ErrorCode::kParse, "domain file must hold an object with an 'attributes' array");
  }
  if (!doc.contains("protected") || !doc["protected"].is_string()) {
    throw Error(ErrorCode::kParse, "domain file must name the 'protected' attribute");
  }
  std::vector<AttributeSpec> attributes;
  for (const auto& node : doc["attributes"]) {
    if (!node.is_object()) throw Error(ErrorCode::kParse, "attribute entry must be an object");
    AttributeSpec a;
    try {
      a.name = node.at("name").get<std::string>();
      a.kind = kind_from(node.at("kind").get<std::string>());
      a.lb = node.at("lb").get<double>();
      a.ub = node.at("ub").get<double>();
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kParse, std::string("malformed attribute: ") + e.what());
    }
    attributes.push_back(std::move(a));
  }
  const std::string protected_name = doc["protected"].get<std::string>();
  std::optional<std::size_t> index;
  for (std::size_t i = 0; i < attributes.size(); ++i) {
    if (attributes[i].name == protected_name) index = i;
  }
  if (!index) {
    throw Error(ErrorCode::kUnknownProtected, "unknown protected attribute '" + protected_name + "'");
  }
  return DomainSpec(std::move(attributes), *index);
}

DomainSpec load_domain(const std::filesystem::path& path) {
  return parse_domain(detail::read_text_file(path));
}

std::string domain_to_json(const DomainSpec& domain) {
  json attributes = json::array();
  for (const auto& a : domain.attributes()) {
    attributes.push_back({{"name", a.name}, {"kind", to_string(a.kind)}, {"lb", a.lb}, {"ub", a.ub}});
  }
  json doc;
  doc["attributes"] = std::move(attributes);
  doc["protected"] = domain.attribute(domain.protected_index()).name;
  return doc.dump(2) + "\n";
}

}  // namespace faircert
