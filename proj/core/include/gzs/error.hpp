#pragma once

#include <stdexcept>
#include <string>

namespace gzs {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad permutation window, bad token, wrong length.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// lambda is not strictly increasing.
class NonRegularWeight : public Error {
 public:
  using Error::Error;
};

// A point or diagram does not have the triangular shape for the given n.
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

// An integer-only operation received a point with non-integral entries.
class NonIntegralPoint : public Error {
 public:
  using Error::Error;
};

// A diagram operation that needs a simple-vertex diagram got something else.
class NotSimple : public Error {
 public:
  using Error::Error;
};

// An edge operation referenced an edge that is not in the diagram.
class EdgeAbsent : public Error {
 public:
  using Error::Error;
};

// Request exceeds what an enumeration is allowed to attempt (e.g. brute force at n > 4).
class CapabilityError : public Error {
 public:
  using Error::Error;
};

}  // namespace gzs
