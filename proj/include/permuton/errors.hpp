#pragma once

/**
 * @file errors.hpp
 * @brief Exception types shared by every permuton module.
 */

#include <cstddef>
#include <stdexcept>
#include <string>

namespace permuton {

enum class ErrorKind {
  invalid_argument,
  parse,
  division_by_zero,
  invalid_conductor,
  not_real,
  degree_mismatch,
  not_subgroup,
  not_generating,
  intransitive,
  cap_exceeded,
  unsupported_group,
  degenerate_state,
  not_hermitian,
  consistency,
  verification,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by every text parser. `line` is 0 when the input is a single line.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t position, std::size_t line = 0)
      : Error(ErrorKind::parse, format(msg, position, line)),
        message_(msg),
        position_(position),
        line_(line) {}

  /// The message without the location prefix.
  const std::string& message() const noexcept { return message_; }
  std::size_t position() const noexcept { return position_; }
  std::size_t line() const noexcept { return line_; }

 private:
  static std::string format(const std::string& msg, std::size_t pos,
                            std::size_t line) {
    std::string out = "parse error";
    if (line != 0) out += " at line " + std::to_string(line);
    out += " at position " + std::to_string(pos) + ": " + msg;
    return out;
  }

  std::string message_;
  std::size_t position_;
  std::size_t line_;
};

}  // namespace permuton
