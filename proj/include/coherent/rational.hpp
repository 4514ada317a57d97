#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace coherent {

// Exact fraction over arbitrary-precision integers; always kept canonical.
using Rational = mpq_class;

// Bad user input: malformed payloads, out-of-range parameters, violated preconditions.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computed result broke an invariant the construction guarantees.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Parses "p/q", "p", or a finite decimal such as "0.55" (exactly, as 55/100).
Rational parse_rational(std::string_view text);

/// Lowest-terms "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

/// Twelve significant digits, as used in every human-facing float column.
std::string format_float(double value);
inline std::string format_float(const Rational& value) { return format_float(to_double(value)); }

Rational pow(const Rational& base, unsigned exponent);
Rational abs(const Rational& value);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw ValidationError("zero denominator");
  Rational r{mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))};
  r.canonicalize();
  return r;
}

}  // namespace coherent
