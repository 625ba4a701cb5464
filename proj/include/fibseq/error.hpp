#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fibseq {

enum class ErrorCode {
  DimensionMismatch,
  InvalidComplex,
  InvalidChainMap,
  MalformedSubquotient,
  NotWellDefined,
  Incomposable,
  NegativeDegree,
  WrongVariant,
  NotCommuting,
  NotFiberSequence,
  IncompatibleRestrictions,
  NotAcyclic,
  NotInvertible,
  Parse,
  UnknownName,
};

std::string_view to_string(ErrorCode code);

/// Every recoverable failure in the library is reported through this type.
/// Internal invariant violations (a construction that must succeed but did
/// not) are reported as std::logic_error instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), detail_(message) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace fibseq
