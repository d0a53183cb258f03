#ifndef GRAPOLY_ERRORS_HPP
#define GRAPOLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace grapoly {

// Malformed input: unknown edge ids, bad files, invalid parameters.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A size guard tripped before an exponential enumeration started.
struct GuardError : std::runtime_error {
  explicit GuardError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numeric argument outside the admissible region (nonpositive belief entry,
// degenerate xi, ...).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Exact division left a remainder. Firing on a theta specialization would
// falsify the divisibility theorem behind omega, so this is never caught
// and rethrown as something weaker.
struct DivisibilityError : std::runtime_error {
  explicit DivisibilityError(const std::string& msg) : std::runtime_error(msg) {}
};

// Root finders and other iterative numerics failing to converge.
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace grapoly

#endif
