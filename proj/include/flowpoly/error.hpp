#pragma once
#include <stdexcept>
#include <string>

namespace flowpoly {

enum class Errc {
  SumMismatch,
  LengthMismatch,
  NonIntegral,
  BadParameters,
  InvalidGraph,
  SumNonzero,
  InternalMismatch,
  NotCoprime,
  MalformedDiagram,
  NegativeHull,
  ParseError,
  MethodUnavailable,
  TooLarge,
};

inline const char* errc_name(Errc e) {
  switch (e) {
    case Errc::SumMismatch: return "SumMismatch";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::NonIntegral: return "NonIntegral";
    case Errc::BadParameters: return "BadParameters";
    case Errc::InvalidGraph: return "InvalidGraph";
    case Errc::SumNonzero: return "SumNonzero";
    case Errc::InternalMismatch: return "InternalMismatch";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::MalformedDiagram: return "MalformedDiagram";
    case Errc::NegativeHull: return "NegativeHull";
    case Errc::ParseError: return "ParseError";
    case Errc::MethodUnavailable: return "MethodUnavailable";
    case Errc::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace flowpoly
