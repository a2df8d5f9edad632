#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// An element is stored as its residue modulo the N-th cyclotomic polynomial,
// in the power basis 1, z, z^2, ..., z^{phi(N)-1}, with GMP rationals as
// coefficients. Values are immutable from the caller's point of view and can be
// shared freely between threads.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qdouble {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Euler's totient.
unsigned euler_phi(unsigned n);

/// Integer coefficients of the N-th cyclotomic polynomial, lowest degree
/// first. The result is cached; the reference stays valid for the process.
const std::vector<long>& cyclotomic_polynomial(unsigned n);

class CycScalar {
 public:
  /// Zero of Q (order 1).
  CycScalar();

  static CycScalar zero(unsigned order);
  static CycScalar one(unsigned order);
  static CycScalar rational(unsigned order, const Rational& q);
  /// zeta_N^k, k reduced mod N.
  static CycScalar root_of_unity(unsigned order, long long k);
  /// Build from power-basis coefficients. Fewer than phi(N) coefficients are
  /// zero-padded; more are reduced modulo Phi_N.
  static CycScalar from_coeffs(unsigned order, std::vector<Rational> coeffs);

  unsigned order() const noexcept { return order_; }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  CycScalar operator-() const;
  CycScalar& operator+=(const CycScalar& b);
  CycScalar& operator-=(const CycScalar& b);
  CycScalar& operator*=(const CycScalar& b);

  friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
  friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
  friend CycScalar operator*(const CycScalar& a, const CycScalar& b);
  friend CycScalar operator/(const CycScalar& a, const CycScalar& b);

  /// Equality is only defined for equal orders; comparing different orders
  /// throws. Embed first.
  friend bool operator==(const CycScalar& a, const CycScalar& b);

  /// Multiplicative inverse via extended Euclid against Phi_N.
  CycScalar inverse() const;
  CycScalar pow(long long e) const;
  /// Image under zeta_N -> zeta_M^{M/N}. M must be a multiple of order().
  CycScalar embed(unsigned m) const;

  /// Smallest k > 0 with a^k == 1 if a is a root of unity of order dividing
  /// 2*order(), else 0.
  unsigned root_order() const;

  std::string to_string() const;

 private:
  CycScalar(unsigned order, std::vector<Rational> coeffs) : order_(order), coeffs_(std::move(coeffs)) {}
  void reduce_from(std::vector<Rational>& poly);

  unsigned order_ = 1;
  std::vector<Rational> coeffs_;
};

// Free-function spellings of the field operations.
CycScalar root_of_unity(unsigned order, long long k);
CycScalar add(const CycScalar& a, const CycScalar& b);
CycScalar mul(const CycScalar& a, const CycScalar& b);
CycScalar neg(const CycScalar& a);
CycScalar inv(const CycScalar& a);
CycScalar embed(const CycScalar& a, unsigned m);

unsigned lcm_order(unsigned a, unsigned b);

}  // namespace qdouble
