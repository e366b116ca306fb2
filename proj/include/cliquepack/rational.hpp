#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace cliquepack {

/// Exact rational number. GMP keeps every result in canonical form
/// (gcd(|num|, den) = 1, den >= 1).
using Rational = mpq_class;

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (graph files, rationals, profiles).
class ParseError : public Error {
public:
  using Error::Error;
};

/// A caller-supplied precondition was violated.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// A mathematical guarantee failed to hold. Signals a bug.
class InvariantViolation : public Error {
public:
  using Error::Error;
};

/// Always "num/den", including integers ("2/1") and zero ("0/1").
std::string to_string(const Rational& q);

/// Accepts "num/den" or a bare integer "num". No decimals.
Rational parse_rational(std::string_view text);

Rational make_rational(long num, long den = 1);

}  // namespace cliquepack
