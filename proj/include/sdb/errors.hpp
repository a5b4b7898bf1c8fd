#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sdb {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different fields, or a field descriptor is invalid.
class field_error : public error {
 public:
  using error::error;
};

class division_by_zero : public error {
 public:
  using error::error;
};

/// Evaluation of a rational function landed on a zero of its denominator.
class pole_error : public error {
 public:
  using error::error;
};

/// Tensor/element shapes disagree.
class dimension_error : public error {
 public:
  using error::error;
};

/// Malformed scalar expression; `position()` is the 0-based byte offset.
class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Operation needs a finite (prime) field or otherwise rejects its input.
class unsupported_field : public error {
 public:
  using error::error;
};

/// Bad external input (JSON file contents, PD codes, command options).
class input_error : public error {
 public:
  using error::error;
};

}  // namespace sdb
