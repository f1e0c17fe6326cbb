#include "faircert/errors.hpp"

namespace faircert {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo: return "io";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kDimensionMismatch: return "dimension-mismatch";
    case ErrorCode::kNonFinite: return "non-finite";
    case ErrorCode::kStructure: return "structure";
    case ErrorCode::kInvalidDomain: return "invalid-domain";
    case ErrorCode::kUnknownProtected: return "unknown-protected";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kOracleLimit: return "oracle-limit";
    case ErrorCode::kInternal: return "internal";
  }
  return "unknown";
}

namespace {

std::string decorate(const std::string& message, std::optional<std::size_t> layer) {
  if (!layer) return message;
  return "layer " + std::to_string(*layer) + ": " + message;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message, std::optional<std::size_t> layer)
    : std::runtime_error(decorate(message, layer)), code_(code), layer_(layer) {}

}  // namespace faircert
