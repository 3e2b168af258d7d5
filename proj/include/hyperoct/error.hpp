#ifndef HYPEROCT_ERROR_HPP
#define HYPEROCT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperoct {

/// Degree out of range, or two operands of different degree.
class DegreeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation defined only on commuting pairs received a non-commuting one.
class NotCommutingError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The meridian of a torus cannot be conjugated into S_n, i.e. the double
/// cover is branched over that component.
class HypothesisViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Syntax or validation error in textual input. Line and column are 1-based;
/// a line of 0 means the text was a single literal with no line context.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error(format(line, column, message)),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  static std::string format(std::size_t line, std::size_t column,
                            const std::string& message) {
    if (line == 0) return "column " + std::to_string(column) + ": " + message;
    return "line " + std::to_string(line) + ", column " +
           std::to_string(column) + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace hyperoct

#endif  // HYPEROCT_ERROR_HPP
