#ifndef POSSLOG_ERRORS_HPP
#define POSSLOG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace posslog {

struct PosslogError : std::runtime_error {
  explicit PosslogError(const std::string& what) : std::runtime_error(what) {}
};

/// Syntax error raised by the formula, plan and document parsers.
/// `position` is a 0-based byte offset into the parsed text.
struct ParseError : PosslogError {
  ParseError(const std::string& what, std::size_t position)
      : PosslogError(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

/// World enumeration was requested for a universe above the configured limit.
struct UniverseTooLarge : PosslogError {
  UniverseTooLarge(std::size_t size, std::size_t limit)
      : PosslogError("universe of " + std::to_string(size) +
                     " atoms exceeds the world-enumeration limit of " +
                     std::to_string(limit)) {}
};

}  // namespace posslog

#endif  // POSSLOG_ERRORS_HPP
