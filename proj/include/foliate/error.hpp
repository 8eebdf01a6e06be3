#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace foliate {

// Stable error identifiers; the CLI reports them by name.
enum class ErrorCode {
  VariableMismatch,
  UnknownVariable,
  ZeroDenominator,
  InsufficientOrder,
  NotLogarithmic,
  NotClosed,
  PreconditionFailed,
  EmptyGenerators,
  MalformedTransition,
  InconsistentAtlas,
  NotAdapted,
  OrderMismatch,
  MissingPair,
  FrameMismatch,
  NotNormalized,
  NonPolynomial,
  NotTangential,
  ZeroOnS,
  PoleOnContour,
  SyntaxError,
  NonIntegerExponent,
  DivisionNotRational,
  InvalidArgument,
  InvalidDocument,
  InternalError,
};

std::string_view code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse failure with the byte offset where it was detected.
class SyntaxError : public Error {
 public:
  SyntaxError(ErrorCode code, const std::string& message, std::size_t position);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace foliate
