#pragma once

#include <stdexcept>
#include <string>

namespace lacunary {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A series evaluator hit its term budget before the stopping rule fired.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

/// NaN (or infinity where a finite value is required) reached a scalar kernel.
class InvalidNumber : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ZeroConstantTerm : public Error {
 public:
  using Error::Error;
};

class NonzeroConstantTerm : public Error {
 public:
  using Error::Error;
};

/// An exact computation met a quantity the rational domain cannot represent.
class ExactnessViolation : public Error {
 public:
  using Error::Error;
};

class MissingDegreeMetadata : public Error {
 public:
  using Error::Error;
};

class OrderOverflow : public Error {
 public:
  using Error::Error;
};

class NonFiniteFactor : public Error {
 public:
  using Error::Error;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

class ModeUnsupported : public Error {
 public:
  using Error::Error;
};

class NoSolution : public Error {
 public:
  using Error::Error;
};

class RankDeficient : public Error {
 public:
  using Error::Error;
};

class QuadratureFailure : public Error {
 public:
  using Error::Error;
};

/// Invalid run configuration (maps to CLI exit code 2).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace lacunary
