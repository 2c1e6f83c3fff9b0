#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace dmod {

// Arbitrary precision rational, always kept in lowest terms with a positive
// denominator.
using Rational = mpq_class;

/// Exact element of the Gaussian rationals Q(i).
///
/// Every arithmetic result is canonical, so `==` is field equality. Values
/// are immutable once built; the class is a plain value type.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(Rational re, Rational im = 0);

  /// num/den + 0i; throws DivisionByZero when den == 0.
  static Scalar fraction(long num, long den);
  static Scalar imaginary_unit() { return Scalar(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_integer() const;

  /// Integer value of a scalar with is_integer() == true.
  mpz_class to_integer() const;

  Scalar conj() const { return Scalar(re_, -im_); }
  Scalar inverse() const;

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Text form: "p/q", "p", "p/q+r/si", "r/si".
  std::string to_string() const;
  static Scalar parse(std::string_view text);

 private:
  Rational re_{0};
  Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Canonical text of a rational: "p" or "p/q".
std::string rational_to_string(const Rational& q);

}  // namespace dmod
