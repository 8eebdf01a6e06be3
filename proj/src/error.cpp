#include "foliate/error.hpp"

namespace foliate {

std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::VariableMismatch: return "VariableMismatch";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::InsufficientOrder: return "InsufficientOrder";
    case ErrorCode::NotLogarithmic: return "NotLogarithmic";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::EmptyGenerators: return "EmptyGenerators";
    case ErrorCode::MalformedTransition: return "MalformedTransition";
    case ErrorCode::InconsistentAtlas: return "InconsistentAtlas";
    case ErrorCode::NotAdapted: return "NotAdapted";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::MissingPair: return "MissingPair";
    case ErrorCode::FrameMismatch: return "FrameMismatch";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NonPolynomial: return "NonPolynomial";
    case ErrorCode::NotTangential: return "NotTangential";
    case ErrorCode::ZeroOnS: return "ZeroOnS";
    case ErrorCode::PoleOnContour: return "PoleOnContour";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NonIntegerExponent: return "NonIntegerExponent";
    case ErrorCode::DivisionNotRational: return "DivisionNotRational";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidDocument: return "InvalidDocument";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(code_name(code)) + ": " + message), code_(code) {}

SyntaxError::SyntaxError(ErrorCode code, const std::string& message, std::size_t position)
    : Error(code, message + " at position " + std::to_string(position)), position_(position) {}

}  // namespace foliate
