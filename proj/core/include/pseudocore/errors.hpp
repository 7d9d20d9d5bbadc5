#pragma once

#include <stdexcept>

namespace pseudocore {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// File could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// Input data violates the expected file format.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Caller passed arguments that break an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A walk experiment has no start nodes left after filtering.
class EmptyInstanceSet : public Error {
 public:
  using Error::Error;
};

}  // namespace pseudocore
