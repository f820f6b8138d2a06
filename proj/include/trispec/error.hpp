#pragma once

#include <stdexcept>
#include <string>

namespace trispec {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: parse failures, cycles, unknown names,
/// structures that are not lattices.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed the configured point cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A model lies outside the range where a classification is available.
class ClassificationUnavailable : public Error {
 public:
  using Error::Error;
};

}  // namespace trispec
