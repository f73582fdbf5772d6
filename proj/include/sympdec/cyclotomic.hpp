#pragma once

#include <array>
#include <boost/multiprecision/gmp.hpp>
#include <ostream>
#include <string>

namespace sympdec {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Exact element of the cyclotomic field Q(zeta_8).
///
/// Stored as a0 + a1*z + a2*z^2 + a3*z^3 with z^4 = -1, so i = z^2 and
/// sqrt(2) = z - z^3. Every coefficient is a canonical GMP rational.
class CycScalar {
 public:
  CycScalar() = default;
  CycScalar(long value) : c_{Rational(value), 0, 0, 0} {}  // NOLINT: implicit
  explicit CycScalar(const Rational& value) : c_{value, 0, 0, 0} {}
  explicit CycScalar(const std::array<Rational, 4>& coeffs) : c_(coeffs) {}

  static CycScalar zeta();
  static CycScalar imag_unit();
  static CycScalar sqrt2();
  /// 1/sqrt(2) = (z - z^3)/2.
  static CycScalar inv_sqrt2();

  const Rational& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }
  const std::array<Rational, 4>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;

  CycScalar inverse() const;

  CycScalar& operator+=(const CycScalar& rhs);
  CycScalar& operator-=(const CycScalar& rhs);
  CycScalar& operator*=(const CycScalar& rhs);
  CycScalar& operator/=(const CycScalar& rhs) { return *this *= rhs.inverse(); }

  friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
  friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
  friend CycScalar operator*(const CycScalar& a, const CycScalar& b);
  friend CycScalar operator/(CycScalar a, const CycScalar& b) { return a /= b; }
  CycScalar operator-() const;

  friend bool operator==(const CycScalar& a, const CycScalar& b) { return a.c_ == b.c_; }

  /// Human-readable form using `z` for zeta_8, e.g. "1/2*z - 1/2*z^3".
  std::string to_string() const;

 private:
  std::array<Rational, 4> c_{};
};

std::ostream& operator<<(std::ostream& os, const CycScalar& x);

}  // namespace sympdec
