// error.hpp
//
// Exception types shared by every module. Input problems (bad classes,
// malformed scripts, violated preconditions) derive from InputError; a failed
// internal audit raises InternalInconsistency.

#pragma once

#include <stdexcept>
#include <string>

namespace lyu {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

/// Matrix or operator shapes/labels do not line up.
class ShapeError : public InputError {
 public:
  using InputError::InputError;
};

/// An ample selection outside the declared positive cone of an object.
class InvalidClassError : public InputError {
 public:
  using InputError::InputError;
};

class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

class UnsupportedError : public InputError {
 public:
  using InputError::InputError;
};

class OutOfRangeError : public InputError {
 public:
  using InputError::InputError;
};

/// An exactness, Euler-characteristic or sign audit failed after assembly.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace lyu
