#pragma once

#include <stdexcept>
#include <string>

namespace gvn {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// A step or word does not belong to the graph it is used with.
class ForeignEdge : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed literal or document.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace gvn
