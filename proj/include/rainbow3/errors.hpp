#pragma once

#include <stdexcept>
#include <string>

namespace rainbow3 {

// Base for every error raised by the library. The C API maps each subclass
// onto one status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments: out-of-range vertices, self-loops, bad parameters.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Text input that does not follow one of the documented file formats.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A documented precondition of an operation does not hold for its input
// (e.g. a disconnected graph, or a set that is not the required kind of
// dominating set).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An exact search was asked to run beyond its configured size limit.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

// The construction reached a state that its case analysis says cannot occur.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace rainbow3
