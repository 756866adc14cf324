#pragma once

#include <stdexcept>
#include <string>

namespace dlarg {

// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input: out-of-domain argument, invalid modulus, empty range.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Evaluation at a pole (s = 1 for Hurwitz zeta, non-positive integers for Gamma).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Two independent computations disagree, or an internal health check failed.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Continuous argument tracking could not resolve an increment.
class TrackingError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Sign-change count and argument-principle count disagree after all rescans.
class MissingZeroError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Requested accuracy not reachable with the configured discretisation.
class AccuracyError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Zeros requested beyond what the cache covers.
class CacheMissError : public Error {
 public:
  using Error::Error;
};

// Root search found no sign change.
class NotFoundError : public Error {
 public:
  using Error::Error;
};

}  // namespace dlarg
