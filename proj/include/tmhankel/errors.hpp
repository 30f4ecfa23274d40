#pragma once

#include <stdexcept>
#include <string>

namespace tmhankel {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

// A coordinate division left a remainder. Fraction-free elimination never
// produces one, so seeing this means the caller has a bug.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

// An element outside {0, ±1, ±J, ±J²} was passed to classify().
class NotInValueSet : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidSize : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class NonConvergence : public Error {
 public:
  using Error::Error;
};

class ReplayFailure : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace tmhankel
