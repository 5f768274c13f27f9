#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordlex {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `position` is a byte offset for one-line inputs and
/// a 1-based line number for grammar files.
class ParseError : public Error {
public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message), position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

class OrdinalError : public Error {
public:
  using Error::Error;
};

/// An operation was called on input outside its documented domain.
class PreconditionError : public Error {
public:
  using Error::Error;
};

}  // namespace ordlex
