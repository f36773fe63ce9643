#include "carmichael/error.hpp"

namespace carmichael {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::BothZero: return "BothZero";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::ZeroOrConstant: return "ZeroOrConstant";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::ExhaustedSearchSpace: return "ExhaustedSearchSpace";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NotPrimePower: return "NotPrimePower";
    case ErrorKind::NotComposite: return "NotComposite";
    case ErrorKind::InvalidSeed: return "InvalidSeed";
    case ErrorKind::DegreeBudgetExceeded: return "DegreeBudgetExceeded";
    case ErrorKind::NotEnoughIrreducibles: return "NotEnoughIrreducibles";
    case ErrorKind::EllDoesNotDivide: return "EllDoesNotDivide";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::RamifiedPrime: return "RamifiedPrime";
    case ErrorKind::NotCoprimeToQ: return "NotCoprimeToQ";
    case ErrorKind::NoWitnessBelowCap: return "NoWitnessBelowCap";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace carmichael
