#pragma once

#include <stdexcept>
#include <string>

namespace qsolve {

/// Error codes surfaced by the library. The CLI maps these 1:1 onto the
/// "error" field of its JSON error object.
enum class Errc {
  NonPrimeP,
  LimitExceeded,
  BadModulus,
  BadElement,
  DivisionByZero,
  BadSubfield,
  NotInSubfield,
  OddCharOnly,
  NotASquare,
  OddCharNotSupported,
  ZeroA,
  EvenChar,
  ZeroG,
  NotARoot,
  UInSmallSubfield,
  NotFullSplit,
  NotApplicable,
  InternalVerificationFailure,
};

constexpr const char* to_string(Errc c) {
  switch (c) {
    case Errc::NonPrimeP: return "NonPrimeP";
    case Errc::LimitExceeded: return "LimitExceeded";
    case Errc::BadModulus: return "BadModulus";
    case Errc::BadElement: return "BadElement";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::BadSubfield: return "BadSubfield";
    case Errc::NotInSubfield: return "NotInSubfield";
    case Errc::OddCharOnly: return "OddCharOnly";
    case Errc::NotASquare: return "NotASquare";
    case Errc::OddCharNotSupported: return "OddCharNotSupported";
    case Errc::ZeroA: return "ZeroA";
    case Errc::EvenChar: return "EvenChar";
    case Errc::ZeroG: return "ZeroG";
    case Errc::NotARoot: return "NotARoot";
    case Errc::UInSmallSubfield: return "UInSmallSubfield";
    case Errc::NotFullSplit: return "NotFullSplit";
    case Errc::NotApplicable: return "NotApplicable";
    case Errc::InternalVerificationFailure: return "InternalVerificationFailure";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace qsolve
