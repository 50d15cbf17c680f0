#pragma once

#include <stdexcept>
#include <string>

namespace sgfb {

enum class ErrorCode {
  SelfLoop,
  IndexOutOfRange,
  NegativeWeight,
  DuplicateEdge,
  ZeroDegreeVertex,
  ConnectivityFailure,
  OddVertexCount,
  SingularInteriorBlock,
  EmptyKeepSet,
  NotSymmetric,
  ConvergenceFailure,
  LengthMismatch,
  CutoffOutOfRange,
  PRViolation,
  SingularSynthesis,
  SingularVertexSynthesis,
  ZeroReference,
  FractionOutOfRange,
  InvalidArgument,
  IoError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(to_string(code)) + ": " + msg), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::ZeroDegreeVertex: return "ZeroDegreeVertex";
    case ErrorCode::ConnectivityFailure: return "ConnectivityFailure";
    case ErrorCode::OddVertexCount: return "OddVertexCount";
    case ErrorCode::SingularInteriorBlock: return "SingularInteriorBlock";
    case ErrorCode::EmptyKeepSet: return "EmptyKeepSet";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::CutoffOutOfRange: return "CutoffOutOfRange";
    case ErrorCode::PRViolation: return "PRViolation";
    case ErrorCode::SingularSynthesis: return "SingularSynthesis";
    case ErrorCode::SingularVertexSynthesis: return "SingularVertexSynthesis";
    case ErrorCode::ZeroReference: return "ZeroReference";
    case ErrorCode::FractionOutOfRange: return "FractionOutOfRange";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace sgfb
