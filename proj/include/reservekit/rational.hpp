#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace reservekit {

/// Exact fraction with a positive denominator, always kept in lowest terms.
/// Objectives and weights use this so that ties between candidate reserves
/// are decided exactly rather than by floating-point noise.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// Accepts "3", "3/4", or a finite decimal such as "0.9" (exact: 9/10).
  static Rational parse(std::string_view text);

  /// "num/den", or just "num" when den == 1.
  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Overflow-checked arithmetic; throws Error(invalid_argument) on overflow.
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);

}  // namespace reservekit
