#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace srl {

// Base of every exception thrown by the library. The C API maps each
// subclass onto one srl_status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operand of a fuzzy operator fell outside [0,1].
class DomainError : public Error {
 public:
  using Error::Error;
};

// A Collection failed validation where a valid one was required.
class InvalidCollection : public Error {
 public:
  using Error::Error;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

class CostGuardExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

struct SourceSpan {
  std::size_t line = 1;
  std::size_t column = 1;
};

class ParseError : public Error {
 public:
  enum class Kind { Lexical, Syntax, Semantic };

  ParseError(Kind kind, SourceSpan span, const std::string& message);

  Kind kind() const noexcept { return kind_; }
  SourceSpan span() const noexcept { return span_; }
  // Message without the "line:col" prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  Kind kind_;
  SourceSpan span_;
  std::string detail_;
};

}  // namespace srl
