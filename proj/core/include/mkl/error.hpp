#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mkl {

enum class ErrorKind {
  ParseError,
  LoopsPresent,
  InvalidLattice,
  TooLarge,
  NotComparable,
  FlatNotInLattice,
  RankOutOfRange,
  IndexOutOfRange,
  UnsupportedIndex,
  RankZero,
  AntisymmetryViolated,
  InvariantViolated,
  DegreeTooLarge,
  NegativeHCoefficient,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so that
/// front ends can map it onto exit codes without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mkl
