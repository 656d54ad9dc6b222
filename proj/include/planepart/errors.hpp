#pragma once

#include <stdexcept>
#include <string>

namespace planepart {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside an operation's domain (bad x, unsupported dimension, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Requested work exceeds a configured ceiling (e.g. the generator limit).
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

// Iterative numerics that did not converge or left the floating range.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public ConvergenceError {
 public:
  OverflowError(const std::string& what, int at_n) : ConvergenceError(what), at_n_(at_n) {}
  int at() const { return at_n_; }

 private:
  int at_n_;
};

}  // namespace planepart
