#pragma once

#include <stdexcept>
#include <string>

namespace pavoid {

// Malformed permutation text or out-of-range values.
struct ParseError : std::invalid_argument {
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

// Request exceeds a hard size cap (enumeration blow-up guards).
struct ResourceLimitError : std::runtime_error {
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Input outside the domain of a structural decomposition or formula.
struct DomainError : std::domain_error {
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace pavoid
