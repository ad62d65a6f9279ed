#include "steiner/exact.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace steiner {

Wide exact_div(Wide num, Wide den, const char* what) {
  if (den == 0 || num % den != 0) {
    throw InternalError(std::string("non-integral result in ") + what + ": " + to_string(num) +
                        " / " + to_string(den));
  }
  return num / den;
}

std::int64_t narrow(Wide value, const char* what) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw InternalError(std::string("64-bit overflow in ") + what);
  }
  return static_cast<std::int64_t>(value);
}

Wide binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Wide result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) is divisible by i at every step
    result = result * (n - k + i) / i;
  }
  return result;
}

std::string to_string(Wide value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  // digits extracted from a non-positive value to cover the minimum
  std::string out;
  while (value != 0) {
    const int digit = static_cast<int>(value % 10);
    out.push_back(static_cast<char>('0' + (negative ? -digit : digit)));
    value /= 10;
  }
  if (negative) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw InternalError("rational with zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  const std::int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

std::int64_t Rational::to_integer(const char* what) const {
  if (!is_integer()) {
    throw InternalError(std::string("expected an integer for ") + what + ", got " +
                        steiner::to_string(*this));
  }
  return num_;
}

std::string to_string(const Rational& r) {
  if (r.is_integer()) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace steiner
