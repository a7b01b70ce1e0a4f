#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace orbikt {

using BigInt = mpz_class;
using Rational = mpq_class;

/// num/den in canonical form (mpq arithmetic assumes canonical operands).
inline Rational make_rational(long num, unsigned long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

/// Exact integer value of a rational, or false when it has a denominator.
inline bool as_integer(const Rational& q, BigInt& out) {
  if (q.get_den() != 1) return false;
  out = q.get_num();
  return true;
}

/// Modular helpers for the prime-field stage of the character computation.
/// Moduli must stay below 2^32 so products fit in 64 bits.
namespace modp {

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a % p) * (b % p) % p; }

inline std::uint64_t pow(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (e) {
    if (e & 1) r = mul(r, base, p);
    base = mul(base, base, p);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t inv(std::uint64_t a, std::uint64_t p) { return pow(a, p - 2, p); }

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

bool is_prime(std::uint64_t n);

}  // namespace modp

}  // namespace orbikt
