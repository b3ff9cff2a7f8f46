#pragma once

#include <stdexcept>
#include <string>

namespace distred {

enum class ErrorCode {
  EmptyPart,
  NotCovering,
  ComparableParts,
  DuplicatePart,
  AlphabetMismatch,
  AlphabetTooLarge,
  ImproperPartition,
  TrivialResult,
  SizeCapExceeded,
  CapacityExceeded,
  SourceMismatch,
  EmptyCandidate,
  NotMerged,
  NotSubstitutable,
  MalformedCandidate,
  ParseError,
};

/// Single exception type for all domain errors; `code()` identifies the
/// contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::EmptyPart: return "EmptyPart";
    case ErrorCode::NotCovering: return "NotCovering";
    case ErrorCode::ComparableParts: return "ComparableParts";
    case ErrorCode::DuplicatePart: return "DuplicatePart";
    case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::AlphabetTooLarge: return "AlphabetTooLarge";
    case ErrorCode::ImproperPartition: return "ImproperPartition";
    case ErrorCode::TrivialResult: return "TrivialResult";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::CapacityExceeded: return "CapacityExceeded";
    case ErrorCode::SourceMismatch: return "SourceMismatch";
    case ErrorCode::EmptyCandidate: return "EmptyCandidate";
    case ErrorCode::NotMerged: return "NotMerged";
    case ErrorCode::NotSubstitutable: return "NotSubstitutable";
    case ErrorCode::MalformedCandidate: return "MalformedCandidate";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace distred
