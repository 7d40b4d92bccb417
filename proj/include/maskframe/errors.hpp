#ifndef MASKFRAME_ERRORS_HPP
#define MASKFRAME_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace maskframe {

/// Bad user-facing input: malformed file, f(0) != 1, invalid flag value.
struct invalid_input : std::runtime_error {
  explicit invalid_input(const std::string& msg) : std::runtime_error(msg) {}
};

/// Precondition violated by a caller (zero polynomial, grid too coarse, ...).
struct domain_error : std::invalid_argument {
  explicit domain_error(const std::string& msg) : std::invalid_argument(msg) {}
};

/// A numerical stage exceeded its cap or failed to converge.
struct numerical_error : std::runtime_error {
  explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace maskframe

#endif
