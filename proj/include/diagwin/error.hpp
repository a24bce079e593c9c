#pragma once

#include <stdexcept>
#include <string>

namespace diagwin {

/// Base class of every error raised by the library. The CLI maps
/// ResourceError (and configuration problems) to exit code 2, everything
/// else to 1.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A window (k,l) violating 1 <= k < l <= n or l - k + 1 >= m.
class WindowConstraintError : public Error {
public:
  using Error::Error;
};

/// A column selection that is not strictly increasing or leaves its window.
class SelectionError : public Error {
public:
  using Error::Error;
};

/// Operands living on different grids.
class ShapeMismatchError : public Error {
public:
  using Error::Error;
};

/// A window chain that is not sorted in both k and l.
class WindowOrderError : public Error {
public:
  using Error::Error;
};

/// An argument outside the domain of an operation.
class DomainError : public Error {
public:
  using Error::Error;
};

/// A configured resource cap was exceeded.
class ResourceError : public Error {
public:
  using Error::Error;
};

/// Malformed monomial, ideal, chain or configuration text.
class ParseError : public Error {
public:
  using Error::Error;
};

} // namespace diagwin
