#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dwlab {

/// Base class for every error the library raises on bad input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad sizes, non-tournament relations, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// An exponential oracle was asked to run above its configured size cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t size, std::size_t cap)
      : Error(what + ": size " + std::to_string(size) + " exceeds cap " + std::to_string(cap)),
        size_(size),
        cap_(cap) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t size_;
  std::size_t cap_;
};

/// A routine that requires a sparse tournament or ordering was given something else.
class NotSparse : public Error {
 public:
  using Error::Error;
};

}  // namespace dwlab
