#pragma once

#include <stdexcept>
#include <string>

namespace psct {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid input or a violated precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Independent checks inside the library disagree. Signals a bug, never bad input.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace psct
