#pragma once

#include <stdexcept>
#include <string>

namespace stralg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: syntax errors, unknown identifiers, invalid strings.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// The operation does not support the given word representation.
class Unsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace stralg
