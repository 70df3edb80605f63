#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace dynseq {

enum class ErrorKind {
  DescriptorMismatch,
  DivisionByZero,
  ReducibleMinimalPolynomial,
  InvalidField,
  Parse,
  VarTableMismatch,
  DimensionMismatch,
  SizeLimitExceeded,
  ZeroDenominatorSymbolic,
  Indeterminacy,
  NonIntegerValuedPolynomial,
  ZeroBaseNegativeExponent,
  OrderMismatch,
  InvalidArgument,
  UnknownName,
};

const char* to_string(ErrorKind kind);

// Every failure in the library is reported through this type. `index` carries
// the offending position for Parse errors, the orbit index for Indeterminacy
// and the component index for ratmap evaluation failures.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::optional<std::int64_t> index = std::nullopt)
      : std::runtime_error(what), kind_(kind), index_(index) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::int64_t> index() const noexcept { return index_; }

 private:
  ErrorKind kind_;
  std::optional<std::int64_t> index_;
};

}  // namespace dynseq
