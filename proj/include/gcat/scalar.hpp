#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "gcat/error.hpp"

namespace gcat {

using Rat = mpq_class;

/// An element of the cyclotomic field Q(zeta_N), held in canonical form:
/// the residue of the coefficient polynomial modulo the N-th cyclotomic
/// polynomial. Coefficients are exact rationals; slot j holds the
/// coefficient of zeta_N^j and all slots at degrees >= phi(N) are zero.
///
/// Arithmetic between elements of different conductors lifts both to the
/// lcm conductor first. Equality compares canonical forms after lifting,
/// so it is a genuine field equality test.
class Scalar {
 public:
  Scalar() : n_(1), c_(1, Rat(0)) {}
  explicit Scalar(const Rat& r, long conductor = 1);
  Scalar(long num, long den = 1);

  static Scalar zero(long conductor = 1) { return Scalar(Rat(0), conductor); }
  static Scalar one(long conductor = 1) { return Scalar(Rat(1), conductor); }
  /// zeta_N^k
  static Scalar root_of_unity(long N, long k);
  /// Raw coefficient vector (size N, canonical form enforced).
  static Scalar from_coeffs(long N, std::vector<Rat> coeffs);

  long conductor() const { return n_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Value as a rational; requires is_rational().
  Rat rational_value() const;

  /// Image under the field embedding Q(zeta_N) -> Q(zeta_M), N | M.
  Scalar lift(long M) const;
  /// Smallest conductor representation (descends to a divisor of the
  /// conductor when the element lies in the subfield).
  Scalar shrink() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator-() const;
  Scalar operator*(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  /// Multiplicative inverse; throws math_error on zero.
  Scalar inverse() const;
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

  /// Complex conjugation zeta -> zeta^{-1}.
  Scalar conjugate() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  /// Total order on canonical forms (for deterministic sorting only).
  bool operator<(const Scalar& o) const;

  /// Canonical serialization "c0 + c1*z + ... (mod N)"; exact round-trip.
  std::string str() const;
  static Scalar parse(const std::string& s);

  /// Square root of a rational r inside Q(zeta_N), when expressible there
  /// (via Gauss sums and eighth roots of unity). Returns nullopt if the
  /// conductor does not accommodate it.
  static std::optional<Scalar> sqrt_rational(const Rat& r, long N);

 private:
  long n_;              // conductor
  std::vector<Rat> c_;  // size n_, reduced mod Phi_n

  void reduce_(std::vector<Rat>& raw) const;  // raw may have any size
};

Scalar operator*(const Rat& r, const Scalar& s);

/// deg Phi_N
long euler_phi(long n);
/// Coefficients of the N-th cyclotomic polynomial (degree phi(N)), exact.
const std::vector<Rat>& cyclotomic_poly(long n);

}  // namespace gcat
