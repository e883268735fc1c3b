#pragma once

#include <stdexcept>
#include <string>

namespace dacol {

// Base for every error raised by the library. The CLI maps the concrete
// subclasses onto distinct message prefixes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Loops, parallel edges, out-of-range endpoints, inconsistent rotation.
class InvalidGraph : public Error {
 public:
  using Error::Error;
};

class NotTriangulation : public Error {
 public:
  using Error::Error;
};

class MissingRotation : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A state the mathematics says cannot happen (e.g. a forced 3-coloring that
// disagrees with itself, or a lifted certificate that fails verification).
class InternalError : public Error {
 public:
  using Error::Error;
};

class SizeGuardExceeded : public Error {
 public:
  using Error::Error;
};

// Malformed GraphFile text.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace dacol
