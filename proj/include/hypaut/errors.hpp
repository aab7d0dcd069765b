#pragma once

#include <stdexcept>
#include <string>

namespace hypaut {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in cyclotomic field") {}
};

class ZeroEigenvalue : public Error {
 public:
  ZeroEigenvalue() : Error("diagonal entries must be nonzero") {}
};

class EnumerationCapExceeded : public Error {
 public:
  using Error::Error;
};

class NotAnAutomorphism : public Error {
 public:
  using Error::Error;
};

class UnsupportedRange : public Error {
 public:
  using Error::Error;
};

class VertexViolatesSmoothness : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace hypaut
