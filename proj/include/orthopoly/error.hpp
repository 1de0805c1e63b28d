#pragma once

#include <stdexcept>
#include <string>

namespace orthopoly {

// Library-wide error classification. The CLI maps these onto its exit-code
// contract; library callers can switch on kind().
enum class ErrorKind {
  MalformedInput,
  SelfLoop,
  DuplicateEdge,
  NotConnected,
  NotBipartite,
  NonPlanar,
  NotCubic,
  NotPolyhedral,
  NotBiconnected,
  PNodePresent,
  EvenParityTriangle,
  NotSeparating,
  NotBaseCase,
  NotApplicable,
  CoverInvalid,
  FaceColoringFailed,
  CycleDetected,
  TooLarge,
  HingeMismatch,
  NotCornerMode,
  InternalInvariantViolation,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::NotBipartite: return "NotBipartite";
    case ErrorKind::NonPlanar: return "NonPlanar";
    case ErrorKind::NotCubic: return "NotCubic";
    case ErrorKind::NotPolyhedral: return "NotPolyhedral";
    case ErrorKind::NotBiconnected: return "NotBiconnected";
    case ErrorKind::PNodePresent: return "PNodePresent";
    case ErrorKind::EvenParityTriangle: return "EvenParityTriangle";
    case ErrorKind::NotSeparating: return "NotSeparating";
    case ErrorKind::NotBaseCase: return "NotBaseCase";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::CoverInvalid: return "CoverInvalid";
    case ErrorKind::FaceColoringFailed: return "FaceColoringFailed";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::HingeMismatch: return "HingeMismatch";
    case ErrorKind::NotCornerMode: return "NotCornerMode";
    case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
  }
  return "UnknownError";
}

}  // namespace orthopoly
