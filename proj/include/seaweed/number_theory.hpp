#pragma once

#include <cstdint>
#include <ostream>
#include <string>

namespace seaweed {

/// Reduced fraction with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t numerator, std::int64_t denominator = 1);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  /// True when 0 < value < 1/2, compared exactly.
  bool strictly_between_zero_and_half() const { return num_ > 0 && 2 * num_ < den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Euler's totient by trial division. Throws std::invalid_argument for 0.
std::uint64_t euler_phi(std::uint64_t n);

/// base^exponent mod modulus (modulus >= 1).
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus);

/// Fractional part of delta^(phi(n)-1) / n, i.e. (delta^(phi(n)-1) mod n) / n.
/// Requires n >= 2; delta is reduced mod n first.
Rational xi(std::int64_t n, std::int64_t delta);

}  // namespace seaweed
