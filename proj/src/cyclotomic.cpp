#include "sympdec/cyclotomic.hpp"

#include <sstream>

#include "sympdec/error.hpp"

namespace sympdec {

CycScalar CycScalar::zeta() { return CycScalar(std::array<Rational, 4>{0, 1, 0, 0}); }

CycScalar CycScalar::imag_unit() { return CycScalar(std::array<Rational, 4>{0, 0, 1, 0}); }

CycScalar CycScalar::sqrt2() { return CycScalar(std::array<Rational, 4>{0, 1, 0, -1}); }

CycScalar CycScalar::inv_sqrt2() {
  return CycScalar(std::array<Rational, 4>{0, Rational(1, 2), 0, Rational(-1, 2)});
}

bool CycScalar::is_zero() const {
  return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

bool CycScalar::is_one() const {
  return c_[0] == 1 && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

bool CycScalar::is_rational() const {
  return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

CycScalar& CycScalar::operator+=(const CycScalar& rhs) {
  for (std::size_t k = 0; k < 4; ++k) {
    if (!rhs.c_[k].is_zero()) c_[k] += rhs.c_[k];
  }
  return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& rhs) {
  for (std::size_t k = 0; k < 4; ++k) {
    if (!rhs.c_[k].is_zero()) c_[k] -= rhs.c_[k];
  }
  return *this;
}

CycScalar& CycScalar::operator*=(const CycScalar& rhs) {
  *this = *this * rhs;
  return *this;
}

CycScalar operator*(const CycScalar& a, const CycScalar& b) {
  CycScalar out;
  for (std::size_t i = 0; i < 4; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < 4; ++j) {
      if (b.c_[j].is_zero()) continue;
      Rational term = a.c_[i] * b.c_[j];
      const std::size_t k = i + j;
      if (k < 4) {
        out.c_[k] += term;
      } else {
        out.c_[k - 4] -= term;  // z^4 = -1
      }
    }
  }
  return out;
}

CycScalar CycScalar::operator-() const {
  CycScalar out;
  for (std::size_t k = 0; k < 4; ++k) out.c_[k] = -c_[k];
  return out;
}

CycScalar CycScalar::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero in Q(zeta_8)");
  // a(z) * a(-z) has only even powers, i.e. lies in Q(i); then multiply by
  // its Q(i)-conjugate to land in Q.
  const CycScalar flipped({c_[0], -c_[1], c_[2], -c_[3]});
  const CycScalar even = *this * flipped;
  const CycScalar even_conj({even.c_[0], 0, -even.c_[2], 0});
  const Rational norm = even.c_[0] * even.c_[0] + even.c_[2] * even.c_[2];
  CycScalar out = flipped * even_conj;
  for (auto& c : out.c_) c /= norm;
  return out;
}

std::string CycScalar::to_string() const {
  static const char* const kPowers[] = {"", "z", "z^2", "z^3"};
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < 4; ++k) {
    const Rational& c = c_[k];
    if (c.is_zero()) continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag;
    } else if (mag == 1) {
      os << kPowers[k];
    } else {
      os << mag << '*' << kPowers[k];
    }
  }
  if (first) os << '0';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycScalar& x) { return os << x.to_string(); }

}  // namespace sympdec
