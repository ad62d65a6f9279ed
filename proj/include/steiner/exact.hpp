#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace steiner {

/// Raised when a result that must be an exact integer is not, or when a value
/// leaves the range of the 64-bit result type. Either means a precondition was
/// violated upstream or there is a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

__extension__ typedef __int128 Wide;

/// Exact quotient `num / den`; throws InternalError when `den` does not divide `num`.
Wide exact_div(Wide num, Wide den, const char* what);

/// Narrows to int64, throwing InternalError on overflow.
std::int64_t narrow(Wide value, const char* what);

/// Binomial coefficient C(n, k), exact; zero when k < 0 or k > n.
Wide binomial(std::int64_t n, std::int64_t k);

std::string to_string(Wide value);

/// Reduced fraction with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t numerator, std::int64_t denominator = 1);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  /// The value as an integer; throws InternalError if it is not one.
  std::int64_t to_integer(const char* what) const;

  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::string to_string(const Rational& r);

}  // namespace steiner
