#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace nucleus {

/// Unbounded signed integer used for every exact count.
using BigInt = boost::multiprecision::cpp_int;

std::string to_decimal(const BigInt& value);

/// Parses an optionally signed decimal string. Throws std::invalid_argument
/// on anything else (including empty input and embedded whitespace).
BigInt parse_decimal(std::string_view text);

/// Natural logarithm of a positive integer, accurate to double precision even
/// when the value is far outside double range.
double log_of(const BigInt& value);

/// Ratio num/den as a double, computed in log space. den must be positive.
double ratio_of(const BigInt& num, const BigInt& den);

}  // namespace nucleus
