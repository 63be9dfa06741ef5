#include "veronese/fp.hpp"

#include <string>
#include <vector>

namespace veronese::fp {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t smallest_prime_factor(std::uint64_t n) {
  if (n < 2) fail(errc::invalid_argument, "smallest_prime_factor needs n >= 2");
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return d;
  }
  return n;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (!is_prime(p)) fail(errc::not_prime, "field characteristic " + std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t{1} << 31)) fail(errc::too_large, "characteristic above 2^31 unsupported");
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const noexcept {
  std::uint64_t r = 1 % p_;
  a %= p_;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  a %= p_;
  if (a == 0) fail(errc::invalid_argument, "inverse of zero");
  return pow(a, p_ - 2);
}

std::uint64_t PrimeField::primitive_root() const {
  if (p_ == 2) return 1;
  // Factor p-1, then test candidates in increasing order.
  std::vector<std::uint64_t> factors;
  std::uint64_t m = p_ - 1;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  for (std::uint64_t g = 2; g < p_; ++g) {
    bool ok = true;
    for (std::uint64_t q : factors) {
      if (pow(g, (p_ - 1) / q) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  fail(errc::invalid_argument, "no primitive root found");  // unreachable for prime p
}

std::uint64_t PrimeField::root_of_unity(std::uint64_t k) const {
  if (k == 0 || (p_ - 1) % k != 0) {
    fail(errc::root_unavailable,
         "field F_" + std::to_string(p_) + " has no primitive " + std::to_string(k) + "-th root of unity");
  }
  return pow(primitive_root(), (p_ - 1) / k);
}

std::uint64_t choose_prime(std::uint64_t exponent, std::uint64_t group_order) {
  if (exponent == 0 || group_order == 0) {
    fail(errc::invalid_argument, "choose_prime needs positive arguments");
  }
  for (std::uint64_t p = 2;; ++p) {
    if (!is_prime(p)) continue;
    if (p % exponent != 1 % exponent) continue;
    if (group_order % p == 0) continue;
    return p;
  }
}

}  // namespace veronese::fp
