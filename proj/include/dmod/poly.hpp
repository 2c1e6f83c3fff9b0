#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dmod/scalar.hpp"

namespace dmod {

// Exponent pair (deg_x, deg_y) of a bivariate monomial.
struct Exponent2 {
  unsigned x = 0;
  unsigned y = 0;

  friend auto operator<=>(const Exponent2&, const Exponent2&) = default;
};

/// Sparse polynomial in C[x, y] with Gaussian rational coefficients.
/// Zero coefficients are never stored; the zero polynomial has no terms.
class Poly2 {
 public:
  using Terms = std::map<Exponent2, Scalar>;

  Poly2() = default;
  Poly2(const Scalar& c);  // NOLINT(google-explicit-constructor)
  static Poly2 x();
  static Poly2 y();
  static Poly2 monomial(unsigned deg_x, unsigned deg_y, const Scalar& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(unsigned deg_x, unsigned deg_y) const;
  int total_degree() const;  // -1 for zero
  int degree_y() const;      // -1 for zero

  void add_term(Exponent2 e, const Scalar& c);

  Poly2 operator-() const;
  Poly2& operator+=(const Poly2& other);
  Poly2& operator-=(const Poly2& other);
  Poly2& operator*=(const Scalar& c);
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(Poly2 a, const Scalar& c) { return a *= c; }
  friend Poly2 operator*(const Scalar& c, Poly2 a) { return a *= c; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend bool operator==(const Poly2&, const Poly2&) = default;

  Poly2 pow(unsigned n) const;
  Poly2 partial_x() const;
  Poly2 partial_y() const;

  std::string to_string() const;

 private:
  Terms terms_;
};

/// The form a*x + b*y. Raw forms keep the caller's scaling.
class LinearForm {
 public:
  /// Throws PreconditionError when a == b == 0.
  LinearForm(Scalar a, Scalar b);

  const Scalar& a() const { return a_; }
  const Scalar& b() const { return b_; }

  // Representative whose first nonzero coefficient is 1.
  LinearForm normalized() const;
  Poly2 to_poly() const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;

  std::string to_string() const;

 private:
  Scalar a_;
  Scalar b_;
};

bool proportional(const LinearForm& f, const LinearForm& g);

/// Exact division of p by L. Returns the quotient when L | p.
std::optional<Poly2> divides_linear(const LinearForm& form, const Poly2& p);

/// Largest k with form^k | p. p must be nonzero.
unsigned linear_multiplicity(const LinearForm& form, Poly2 p);

bool pairwise_independent(std::span<const LinearForm> forms);

}  // namespace dmod
