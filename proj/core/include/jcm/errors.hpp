#pragma once

#include <stdexcept>
#include <string>

namespace jcm {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (rational literals, polynomial literals, configs).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A value violates a type invariant (non-positive root, t outside (0,1), ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A multi-index or position falls outside the sampled window.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// Degrees of the inputs do not match what the operation requires.
class DegreeError : public Error {
 public:
  using Error::Error;
};

/// A repeated root was supplied where only simple roots are allowed.
class SimpleRootsRequired : public Error {
 public:
  using Error::Error;
};

/// Bisection bracket without a sign change.
class BracketError : public Error {
 public:
  using Error::Error;
};

/// Numerical routine could not meet the requested tolerance.
class AccuracyError : public Error {
 public:
  using Error::Error;
};

/// Two routes that must agree exactly did not; indicates a library bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace jcm
