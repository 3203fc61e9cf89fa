#include "mkl/error.hpp"

namespace mkl {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::LoopsPresent: return "LoopsPresent";
    case ErrorKind::InvalidLattice: return "InvalidLattice";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::FlatNotInLattice: return "FlatNotInLattice";
    case ErrorKind::RankOutOfRange: return "RankOutOfRange";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::UnsupportedIndex: return "UnsupportedIndex";
    case ErrorKind::RankZero: return "RankZero";
    case ErrorKind::AntisymmetryViolated: return "AntisymmetryViolated";
    case ErrorKind::InvariantViolated: return "InvariantViolated";
    case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::NegativeHCoefficient: return "NegativeHCoefficient";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace mkl
