#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace cliffhopf {

/// Exact rational scalar. Canonical (reduced, positive denominator) after
/// every arithmetic operation performed through mpq_class.
using Scalar = mpq_class;

/// Raised when a caller breaks a documented precondition (shape, grade, domain).
class ContractViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Raised on malformed external input (configs, scalar strings).
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Parses "p", "-p" or "p/q". Decimal and exponent forms are rejected so that
/// no floating-point path exists.
Scalar parse_scalar(std::string_view text);

/// Canonical "p/q" form, "p" when q = 1.
std::string to_string(const Scalar& s);

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

} // namespace cliffhopf
