#pragma once

#include <stdexcept>
#include <string>

namespace fmm {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not agree (vector lengths, matrix inner dimensions).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A model or command was configured in a way that cannot be honoured.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

/// Malformed input data (image headers, CSV rows, JSON documents).
class FormatError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

/// A file could not be opened, read or written.
class FileError : public Error {
 public:
  using Error::Error;
};

}  // namespace fmm
