#pragma once

#include <stdexcept>
#include <string>

namespace sefib {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller violated a precondition: malformed input, wrong sizes, out-of-range parameters.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Input was well formed but the mathematics failed (singular system, point off a curve, ...).
class MathError : public Error {
 public:
  using Error::Error;
};

/// A computation exceeded a configured resource cap and was refused rather than truncated.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace sefib
