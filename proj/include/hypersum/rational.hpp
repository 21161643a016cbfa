#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace hypersum {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base error type for the whole library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string to_string(const Integer& z);

/// Canonical "p" or "p/q" rendering, never decimal.
std::string to_string(const Rational& q);

Rational rational_from_string(const std::string& text);

bool is_integer(const Rational& q);

std::optional<long> to_long(const Integer& z);
std::optional<long> to_long(const Rational& q);

Integer factorial(const Integer& m);

/// base^exp with exact rational arithmetic; throws on 0^negative.
Rational pow_rational(const Rational& base, long exp);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

}  // namespace hypersum
