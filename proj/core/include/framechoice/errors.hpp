#pragma once

#include <stdexcept>
#include <string>

namespace framechoice {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input data (parse failures, bad sums, unknown labels).
class DataError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside the domain where it is defined
// (incomplete frame domain, universe too large, unsupported size).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The data is well formed but the requested model cannot represent it.
class ModelError : public Error {
 public:
  using Error::Error;
};

}  // namespace framechoice
