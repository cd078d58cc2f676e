#pragma once

#include <stdexcept>
#include <string>

namespace phasefit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain (poles, non-positive radii, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Argument outside the range where a representation is valid.
class RangeError : public Error {
 public:
  using Error::Error;
};

class SingularDenominator : public Error {
 public:
  using Error::Error;
};

class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

class ToleranceUnreachable : public Error {
 public:
  using Error::Error;
};

}  // namespace phasefit
