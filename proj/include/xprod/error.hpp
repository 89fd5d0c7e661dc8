#pragma once

#include <stdexcept>

namespace xprod {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand dimensions do not match what the operation requires.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Exact and floating operands were mixed.
class ModeError : public Error {
 public:
  using Error::Error;
};

/// A literal, table document or report could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A level, index or count lies outside the supported range.
class RangeError : public Error {
 public:
  using Error::Error;
};

}  // namespace xprod
