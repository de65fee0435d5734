#pragma once

#include <cstdint>

#include "omega4/error.hpp"

namespace omega4 {

/// Arithmetic in F_p with canonical representatives 0..p-1.
struct PrimeField {
  uint32_t p = 2;

  PrimeField() = default;
  explicit PrimeField(uint32_t prime) : p(prime) {
    if (!is_prime(prime))
      throw Error(ErrKind::Validation,
                  "field modulus " + std::to_string(prime) + " is not prime");
  }

  static bool is_prime(uint32_t n) {
    if (n < 2 || n > (1u << 20)) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  uint32_t reduce(int64_t x) const {
    int64_t r = x % static_cast<int64_t>(p);
    if (r < 0) r += p;
    return static_cast<uint32_t>(r);
  }
  uint32_t add(uint32_t a, uint32_t b) const { return (a + b) % p; }
  uint32_t sub(uint32_t a, uint32_t b) const { return (a + p - b) % p; }
  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p - a; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p);
  }
  uint32_t pow(uint32_t a, uint64_t e) const {
    uint32_t r = 1 % p;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  uint32_t inv(uint32_t a) const {
    if (a % p == 0) throw Error(ErrKind::Validation, "division by zero in F_p");
    return pow(a, p - 2);
  }

  bool operator==(const PrimeField& o) const { return p == o.p; }
};

}  // namespace omega4
