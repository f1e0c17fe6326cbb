#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace faircert {

enum class ErrorCode {
  kIo,
  kParse,
  kDimensionMismatch,
  kNonFinite,
  kStructure,
  kInvalidDomain,
  kUnknownProtected,
  kInvalidArgument,
  kOracleLimit,
  kInternal,
};

const char* to_string(ErrorCode code);

// Every failure raised by the library. Loader errors carry the offending
// layer index when one applies.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> layer = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> layer() const noexcept { return layer_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> layer_;
};

}  // namespace faircert
