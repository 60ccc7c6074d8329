#pragma once

#include <stdexcept>
#include <string>

namespace svs {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input or broken precondition (CLI exit code 1).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration would exceed the configured state budget
/// (CLI exit code 3).
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

/// A theorem was invoked outside its hypotheses, e.g. q <= d
/// (CLI exit code 4).
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

class NotPrimeError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class ReducibleError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class OverflowError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class DivisionByZeroError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class ZeroModulusError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class DimensionMismatchError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class OutOfRangeError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class DuplicateStripsError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class ExhaustedError : public Error {
 public:
  using Error::Error;
};

class ZeroLeadingError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class ConfigInvalidError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class ParseError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

}  // namespace svs
