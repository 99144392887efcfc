#pragma once

#include <stdexcept>
#include <string>

namespace foldweyl {

// Base of every error the library raises. The CLI maps the subclasses onto
// exit codes: InputError -> 2, TableGapError -> 3, ResourceLimitError -> 4.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

class TableGapError : public Error {
 public:
  using Error::Error;
};

class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

// Raised when an internal consistency check fails (e.g. a diagram automorphism
// that does not preserve brackets, or a Weyl module whose top weight dies).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace foldweyl
