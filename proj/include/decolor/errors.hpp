#ifndef DECOLOR_ERRORS_HPP
#define DECOLOR_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace decolor {

/// Raised for out-of-range arguments and invalid solver configurations.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a graph file cannot be parsed. line() is 1-based; 0 means the
/// problem is not tied to a single line (e.g. a missing header).
class FormatError : public std::runtime_error {
 public:
  FormatError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace decolor

#endif  // DECOLOR_ERRORS_HPP
