#include "nucleus/bigint.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace nucleus {

std::string to_decimal(const BigInt& value) { return value.str(); }

BigInt parse_decimal(std::string_view text) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) {
    throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
  }
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') {
      throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
    }
  }
  BigInt value(std::string(text.substr(i)));
  return text[0] == '-' ? BigInt(-value) : value;
}

double log_of(const BigInt& value) {
  if (value <= 0) throw std::domain_error("log_of requires a positive integer");
  const auto bits = boost::multiprecision::msb(value) + 1;
  if (bits <= 1000) return std::log(value.convert_to<double>());
  // Keep the top 64 bits and account for the shift separately.
  const auto shift = bits - 64;
  const BigInt top = value >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

double ratio_of(const BigInt& num, const BigInt& den) {
  if (den <= 0) throw std::domain_error("ratio_of requires a positive denominator");
  if (num == 0) return 0.0;
  if (num < 0) return -ratio_of(BigInt(-num), den);
  return std::exp(log_of(num) - log_of(den));
}

}  // namespace nucleus
