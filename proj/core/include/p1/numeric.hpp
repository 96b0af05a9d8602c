#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace p1 {

using Integer = mpz_class;
using Rational = mpq_class;

/// Converts to a machine integer, throwing p1::Error if the value does not fit.
long to_long(const Integer& v, const char* what);

/// Same, for values that must also be nonnegative.
std::size_t to_size(const Integer& v, const char* what);

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
Integer binomial(long n, long k);

std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

}  // namespace p1
