#include "hsw/error.hpp"

namespace hsw {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotDominant: return "NotDominant";
    case ErrorKind::ParityViolation: return "ParityViolation";
    case ErrorKind::EmptyEmbeddingSet: return "EmptyEmbeddingSet";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::UnsupportedField: return "UnsupportedField";
    case ErrorKind::InvalidBeta: return "InvalidBeta";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

}  // namespace hsw
