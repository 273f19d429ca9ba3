#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypforms {

/// Arbitrary-precision rational. GMP keeps every value canonical
/// (positive denominator, coprime numerator/denominator) after arithmetic.
using Rat = mpq_class;
using Int = mpz_class;

/// Raised when an operation's precondition is violated by its arguments.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a floating-point cross-check cannot reach its accuracy contract.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rat make_rat(long num, long den = 1);

/// Parses "p", "-p" or "p/q"; throws DomainError on malformed text or q = 0.
Rat parse_rat(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rat& r);

/// Always "p/q", used where a fixed wire format is required.
std::string to_fraction_string(const Rat& r);

inline int sign(const Rat& r) { return sgn(r); }

inline double to_double(const Rat& r) { return r.get_d(); }

/// Exact rational value of a finite double.
Rat from_double(double v);

Rat pow(const Rat& base, unsigned exp);

}  // namespace hypforms
