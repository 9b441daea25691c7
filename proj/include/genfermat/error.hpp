#pragma once

#include <stdexcept>
#include <string>

namespace genfermat {

enum class Errc {
  NotPrime,
  WrongDegree,
  ReducibleModulus,
  FieldTooLarge,
  DivisionByZero,
  InvalidSubfield,
  DegreeCapExceeded,
  InseparableVariable,
  OrderTooHigh,
  CharacteristicDividesExponent,
  DegenerateCoefficient,
  ExponentTooSmall,
  UnsupportedCharacteristic,
  UnsupportedInfinity,
  CaseMismatch,
  PointNotOnCurve,
  AxisPoint,
  NoFormula,
  AmbiguousConvention,
  MalformedOrderSequence,
  BudgetExceeded,
  ParseError,
  MethodDisagreement,
};

const char* errc_name(Errc code);

/// Library-wide exception carrying a machine-readable error code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace genfermat
