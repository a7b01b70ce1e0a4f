#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orbikt/numeric.hpp"

namespace orbikt {

/// Element of the cyclotomic field Q(zeta_m), stored in the power basis
/// 1, zeta, ..., zeta^(phi(m)-1) after reduction modulo the m-th cyclotomic
/// polynomial. Arithmetic is exact; operands must share a conductor.
class Cyclotomic {
 public:
  /// Zero of Q(zeta_m).
  explicit Cyclotomic(std::size_t conductor = 1);
  Cyclotomic(std::size_t conductor, const Rational& value);

  /// zeta_m^k.
  static Cyclotomic root_of_unity(std::size_t conductor, std::int64_t k);
  /// Reduces an arbitrary polynomial in zeta (coefficient i multiplies zeta^i).
  static Cyclotomic from_powers(std::size_t conductor, const std::vector<Rational>& powers);

  std::size_t conductor() const noexcept { return conductor_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Value as a rational; throws InvalidInput unless is_rational().
  Rational rational_value() const;

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator*(const Rational& q) const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);

  /// Complex conjugation zeta -> zeta^(m-1).
  Cyclotomic conj() const;
  /// Image under the Galois automorphism zeta -> zeta^k, gcd(k, m) = 1.
  Cyclotomic galois(std::int64_t k) const;
  /// Embedding into Q(zeta_M) for a multiple M of the conductor.
  Cyclotomic embed(std::size_t target_conductor) const;

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }
  /// Lexicographic order on coefficient vectors (conductors must agree).
  bool operator<(const Cyclotomic& o) const;

  /// Readable form such as "1", "-1", "2*z4^1 - 1/2".
  std::string to_string() const;

 private:
  std::size_t conductor_;
  std::vector<Rational> coeffs_;
};

std::size_t euler_phi(std::size_t m);

/// Coefficients (constant term first) of the m-th cyclotomic polynomial.
std::vector<BigInt> cyclotomic_polynomial(std::size_t m);

}  // namespace orbikt
