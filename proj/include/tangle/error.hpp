#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tangle {

enum class ErrorCode {
  kDiagonalAbsent,
  kCapExceeded,
  kDisconnected,
  kNotDisjoint,
  kNotIrreducible,
  kNotPlanarLayout,
  kInvalidNode,
  kSizeMismatch,
  kMissingH,
  kOutOfRange,
  kDivisibilityViolation,
  kTablesMissing,
  kUnknownCategory,
  kParse,
  kCacheCorrupt,
};

std::string_view ErrorName(ErrorCode code);

// All library failures surface as this exception; `code()` identifies the
// contract violation for callers that want to branch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(ErrorName(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view ErrorName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDiagonalAbsent: return "DiagonalAbsent";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kNotDisjoint: return "NotDisjoint";
    case ErrorCode::kNotIrreducible: return "NotIrreducible";
    case ErrorCode::kNotPlanarLayout: return "NotPlanarLayout";
    case ErrorCode::kInvalidNode: return "InvalidNode";
    case ErrorCode::kSizeMismatch: return "SizeMismatch";
    case ErrorCode::kMissingH: return "MissingH";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kDivisibilityViolation: return "DivisibilityViolation";
    case ErrorCode::kTablesMissing: return "TablesMissing";
    case ErrorCode::kUnknownCategory: return "UnknownCategory";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kCacheCorrupt: return "CacheCorrupt";
  }
  return "Unknown";
}

}  // namespace tangle
