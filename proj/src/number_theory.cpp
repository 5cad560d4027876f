#include "seaweed/number_theory.hpp"

#include <numeric>
#include <stdexcept>

namespace seaweed {

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::domain_error("zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  const std::int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

std::string Rational::to_string() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("euler_phi(0) is undefined");
  std::uint64_t result = n;
  std::uint64_t m = n;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus) {
  if (modulus == 0) throw std::invalid_argument("pow_mod with modulus 0");
  using u128 = unsigned __int128;
  std::uint64_t result = 1 % modulus;
  base %= modulus;
  while (exponent) {
    if (exponent & 1) result = static_cast<std::uint64_t>(static_cast<u128>(result) * base % modulus);
    base = static_cast<std::uint64_t>(static_cast<u128>(base) * base % modulus);
    exponent >>= 1;
  }
  return result;
}

Rational xi(std::int64_t n, std::int64_t delta) {
  if (n < 2) throw std::invalid_argument("xi requires n >= 2");
  const std::int64_t reduced = ((delta % n) + n) % n;
  const auto exponent = euler_phi(static_cast<std::uint64_t>(n)) - 1;
  const auto residue = pow_mod(static_cast<std::uint64_t>(reduced), exponent, static_cast<std::uint64_t>(n));
  return Rational(static_cast<std::int64_t>(residue), n);
}

}  // namespace seaweed
