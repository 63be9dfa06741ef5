#pragma once

#include <cstdint>

#include "veronese/error.hpp"

namespace veronese::fp {

bool is_prime(std::uint64_t n) noexcept;

// Smallest prime factor of n >= 2.
std::uint64_t smallest_prime_factor(std::uint64_t n);

// Arithmetic in Z/p for a prime p < 2^31. Elements are stored reduced
// to [0, p); products fit in 64 bits.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  std::uint64_t characteristic() const noexcept { return p_; }

  std::uint64_t reduce(std::int64_t x) const noexcept {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    return static_cast<std::uint64_t>(r);
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }

  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }

  std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
    return (a * b) % p_;
  }

  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept;

  // Inverse of a != 0.
  std::uint64_t inv(std::uint64_t a) const;

  // Smallest primitive root mod p.
  std::uint64_t primitive_root() const;

  // Deterministic k-th root of unity: g^((p-1)/k) for the smallest
  // primitive root g. Requires k | p-1.
  std::uint64_t root_of_unity(std::uint64_t k) const;

 private:
  std::uint64_t p_;
};

// Smallest prime p with p = 1 (mod exponent) and p not dividing group_order.
std::uint64_t choose_prime(std::uint64_t exponent, std::uint64_t group_order);

}  // namespace veronese::fp
