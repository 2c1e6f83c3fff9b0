#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dmod/poly.hpp"
#include "dmod/scalar.hpp"

namespace dmod {

/// Normal-ordered word y^i x^j Dx^k Dy^l of the second Weyl algebra.
///
/// All multiplication operators sit left of all derivations. The first Weyl
/// algebra C<y, Dy> is the slice j = k = 0 (and C<x, Dx> the slice i = l = 0).
struct WeylMonomial {
  unsigned i = 0;  // y
  unsigned j = 0;  // x
  unsigned k = 0;  // Dx
  unsigned l = 0;  // Dy

  unsigned total_degree() const { return i + j + k + l; }
  // x and y have weight 1, the derivations weight -1.
  int weight() const {
    return static_cast<int>(i + j) - static_cast<int>(k + l);
  }
  unsigned order() const { return k + l; }

  // Componentwise product of the exponent vectors.
  WeylMonomial times(const WeylMonomial& other) const {
    return {i + other.i, j + other.j, k + other.k, l + other.l};
  }
  bool divisible_by(const WeylMonomial& d) const {
    return i >= d.i && j >= d.j && k >= d.k && l >= d.l;
  }

  friend bool operator==(const WeylMonomial&, const WeylMonomial&) = default;
};

// Graded reverse lexicographic order with variables y > x > Dx > Dy: higher
// total degree wins; on a tie, a > b when the last nonzero entry of a - b is
// negative.
std::strong_ordering compare_monomials(const WeylMonomial& a, const WeylMonomial& b);

struct TermOrderLess {
  bool operator()(const WeylMonomial& a, const WeylMonomial& b) const {
    return compare_monomials(a, b) < 0;
  }
};

/// Element of A_2 stored as a sparse sum of normal-ordered monomials.
class WeylOp {
 public:
  // Ascending term order: the initial term is the last entry.
  using Terms = std::map<WeylMonomial, Scalar, TermOrderLess>;

  WeylOp() = default;
  WeylOp(const Scalar& c);  // NOLINT(google-explicit-constructor)
  static WeylOp monomial(WeylMonomial m, const Scalar& c = 1);
  static WeylOp x() { return monomial({0, 1, 0, 0}); }
  static WeylOp y() { return monomial({1, 0, 0, 0}); }
  static WeylOp dx() { return monomial({0, 0, 1, 0}); }
  static WeylOp dy() { return monomial({0, 0, 0, 1}); }
  // Multiplication operator by a polynomial.
  static WeylOp from_poly(const Poly2& p);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const WeylMonomial& m) const;
  void add_term(const WeylMonomial& m, const Scalar& c);

  int total_degree() const;  // -1 for zero
  unsigned order() const;    // operator order, max k + l

  WeylOp operator-() const;
  WeylOp& operator+=(const WeylOp& other);
  WeylOp& operator-=(const WeylOp& other);
  WeylOp& operator*=(const Scalar& c);
  friend WeylOp operator+(WeylOp a, const WeylOp& b) { return a += b; }
  friend WeylOp operator-(WeylOp a, const WeylOp& b) { return a -= b; }
  friend WeylOp operator*(WeylOp a, const Scalar& c) { return a *= c; }
  friend WeylOp operator*(const Scalar& c, WeylOp a) { return a *= c; }
  friend WeylOp operator*(const WeylOp& a, const WeylOp& b);
  friend bool operator==(const WeylOp&, const WeylOp&) = default;

  WeylOp pow(unsigned n) const;

  /// Terms printed in descending term order, e.g. "y^2*x*Dx - 3".
  std::string to_string() const;
  /// Parses sums of products of factors (x, y, Dx, Dy, rationals, and
  /// parenthesized scalars, each with an optional ^power). Products are
  /// evaluated in the Weyl algebra, so "Dx*x" reads as x*Dx + 1.
  static WeylOp parse(std::string_view text);

 private:
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const WeylOp& op);

struct InitialTerm {
  WeylMonomial monomial;
  Scalar coefficient;
};

/// Order-maximal term. Throws PreconditionError for the zero operator.
InitialTerm initial_term(const WeylOp& op);

WeylOp weight_component(const WeylOp& op, int weight);
bool is_homogeneous(const WeylOp& op, int weight);

WeylOp commutator(const WeylOp& a, const WeylOp& b);

class NormalizedArrangement;

/// The annihilators P (Euler operator) and Q of alpha^beta for an arrangement
/// in normalized coordinates.
struct AnnPair {
  WeylOp P;
  WeylOp Q;
  std::size_t m = 0;
  std::vector<Scalar> beta;
};

/// P = x Dx + y Dy - |beta| and
/// Q = (prod_{j>=2} a_j) Dy - sum_{i>=2} beta_i prod_{j>=2, j!=i} a_j
/// with a_1 = x, a_2 = y, a_i = c_i x + y.
AnnPair build_annihilators(const NormalizedArrangement& arr);

/// Same construction from the slopes c_3..c_m and exponents directly.
AnnPair build_annihilators(std::span<const Scalar> slopes, std::span<const Scalar> beta);

struct NormalForm {
  WeylOp s1;  // multiplier of P
  WeylOp s2;  // multiplier of Q
  WeylOp remainder;
};

/// Full reduction of F modulo {P, Q}: F = s1 P + s2 Q + remainder with no
/// monomial of the remainder divisible by in(P) or in(Q). When both initial
/// terms divide a monomial, P is used.
NormalForm normal_form(const WeylOp& f, const AnnPair& gens);

/// Monomial of the normal-form space: jk = 0 and (l != 0 implies i <= m - 2).
bool in_remainder_space(const WeylMonomial& mono, std::size_t m);

/// Generators of the weight-0 normal-form space whose top-degree part has
/// total degree <= max_degree:
///   (y Dx)^k, k >= 1;  (y Dx)^k (y Dy)^l, k, l >= 1, k + l <= m - 2;
///   (y Dy)^l (x Dy)^k, l <= m - 2, k >= 0.
std::vector<WeylOp> weight_zero_generators(std::size_t m, unsigned max_degree);

/// Membership in the span of weight_zero_generators, decided by an exact
/// linear solve. Throws PreconditionError unless op is homogeneous of
/// weight 0.
bool in_N0_span(const WeylOp& op, std::size_t m);

}  // namespace dmod
