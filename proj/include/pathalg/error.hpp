#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pathalg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid configuration: malformed quiver, unknown names, unsupported order
/// or weight group, violated preconditions on inputs.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A mathematically meaningful failure: tip of zero, infinite nontip set
/// requested in full, point off a variety, capped completion, ...
class MathError : public Error {
 public:
  MathError(std::string code, const std::string& what)
      : Error(code + ": " + what), code_(std::move(code)), message_(what) {}

  const std::string& code() const noexcept { return code_; }
  /// what() without the code prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::string code_;
  std::string message_;
};

/// Problem-file diagnostic with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(std::string code, std::size_t line, std::size_t column, const std::string& what)
      : Error(code + " at " + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        code_(std::move(code)),
        message_(what),
        line_(line),
        column_(column) {}

  const std::string& code() const noexcept { return code_; }
  const std::string& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string code_;
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace pathalg
