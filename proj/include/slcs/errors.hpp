#pragma once

#include <stdexcept>
#include <string>

namespace slcs {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input violates a structural invariant (dangling edge, duplicate id, ...).
class ValidationError : public Error {
public:
  using Error::Error;
};

/// An oracle-grade routine was asked to run on an input beyond its bound.
class SizeLimitError : public Error {
public:
  using Error::Error;
};

/// A precondition on a partition or formula does not hold.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// File could not be read, decoded or written.
class IoError : public Error {
public:
  using Error::Error;
};

}  // namespace slcs
