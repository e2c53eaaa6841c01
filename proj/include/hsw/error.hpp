#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hsw {

enum class ErrorKind {
  NotDominant,
  ParityViolation,
  EmptyEmbeddingSet,
  LengthMismatch,
  DimensionMismatch,
  SizeLimit,
  UnsupportedField,
  InvalidBeta,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Exception raised by every validating entry point. what() starts with the
/// kind name, e.g. "NotDominant: k1[0]=1 < k2[0]=2".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hsw
