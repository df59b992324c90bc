#pragma once

#include <stdexcept>
#include <string>

namespace lieherm {

enum class ErrorKind {
  DivisionByZero,
  NoSolution,
  InvalidRank,
  DimensionMismatch,
  DegenerateKilling,
  ConstructionFailure,
  NotCartan,
  InvalidParameter,
  CoframeMismatch,
  NotRealForm,
  NotType11,
  InvalidExponent,
  NotPositiveDefinite,
  NotAFrame,
  NotRegularStructure,
  DegreeMismatch,
  DegenerateDenominator,
  UnknownScenario,
  BadParameter,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace lieherm
