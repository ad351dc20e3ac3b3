#pragma once

#include <stdexcept>
#include <string>

namespace arqlab {

enum class ErrorKind {
  InvalidArgument,
  Parse,
  NotFiniteDimensional,
  MalformedRelation,
  CharacteristicTooSmall,
  NotTwoSided,
  DecompositionStalled,
  IsoSearchInconclusive,
  UndefinedTranslate,
  SocleNotUnique,
  BudgetExceeded,
  NotSelfinjective,
  NotSimplyLaced,
  NotDynkin,
  InvalidTwist,
  NotASink,
  NotTriangular,
  NoSliceFound,
  PreconditionFailed,
  CheckFailed,
  InternalInconsistency,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::NotFiniteDimensional: return "NotFiniteDimensional";
    case ErrorKind::MalformedRelation: return "MalformedRelation";
    case ErrorKind::CharacteristicTooSmall: return "CharacteristicTooSmall";
    case ErrorKind::NotTwoSided: return "NotTwoSided";
    case ErrorKind::DecompositionStalled: return "DecompositionStalled";
    case ErrorKind::IsoSearchInconclusive: return "IsoSearchInconclusive";
    case ErrorKind::UndefinedTranslate: return "UndefinedTranslate";
    case ErrorKind::SocleNotUnique: return "SocleNotUnique";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotSelfinjective: return "NotSelfinjective";
    case ErrorKind::NotSimplyLaced: return "NotSimplyLaced";
    case ErrorKind::NotDynkin: return "NotDynkin";
    case ErrorKind::InvalidTwist: return "InvalidTwist";
    case ErrorKind::NotASink: return "NotASink";
    case ErrorKind::NotTriangular: return "NotTriangular";
    case ErrorKind::NoSliceFound: return "NoSliceFound";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::CheckFailed: return "CheckFailed";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it to a stable exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace arqlab
