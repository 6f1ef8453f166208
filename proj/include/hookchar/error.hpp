#pragma once

#include <stdexcept>
#include <string>

namespace hookchar {

/// Precondition violated by the caller (bad argument, out-of-domain input).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured enumeration or oracle bound was exceeded.
class LimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Malformed text or JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fixture file failed its integrity check.
class ChecksumError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A file could not be opened or read.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two paths from different (n, s) grids were compared.
class GridMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hookchar
