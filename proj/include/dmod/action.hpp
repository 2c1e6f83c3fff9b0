#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dmod/arrangement.hpp"
#include "dmod/poly.hpp"
#include "dmod/weyl.hpp"

namespace dmod {

/// Element p * alpha^(beta + N) of the twisted module. Canonical elements
/// have no alpha_i dividing p; the zero element has p = 0 and N = 0.
struct TwistedElement {
  Poly2 p;
  std::vector<long> shifts;  // N

  bool is_zero() const { return p.is_zero(); }
  friend bool operator==(const TwistedElement&, const TwistedElement&) = default;
};

enum class Generator { X, Y, Dx, Dy };

/// The A_2-module C[x, y]_alpha * alpha^beta of one arrangement.
class TwistedModule {
 public:
  explicit TwistedModule(Arrangement arr);

  const Arrangement& arrangement() const { return arr_; }
  std::size_t size() const { return arr_.size(); }

  TwistedElement generator_element() const;  // alpha^beta
  TwistedElement zero() const;
  // p * alpha^(beta + shifts), canonicalized.
  TwistedElement element(Poly2 p, std::vector<long> shifts) const;

  TwistedElement add(const TwistedElement& a, const TwistedElement& b) const;
  TwistedElement scale(const TwistedElement& e, const Scalar& c) const;
  TwistedElement multiply(const TwistedElement& e, const Poly2& f) const;

  TwistedElement apply(Generator g, const TwistedElement& e) const;
  /// Linear extension over normal-ordered monomials; the rightmost
  /// generator of each monomial acts first.
  TwistedElement apply(const WeylOp& op, const TwistedElement& e) const;

  /// O_L(e): the exponent of L in e relative to alpha^beta. Throws
  /// PreconditionError on the zero element.
  long valuation(const LinearForm& form, const TwistedElement& e) const;

  /// "(p) * a1^2 / (a2*a3^3) * alpha^beta".
  std::string to_string(const TwistedElement& e) const;

 private:
  TwistedElement canonical(Poly2 p, std::vector<long> shifts) const;
  TwistedElement derivative(bool along_x, const TwistedElement& e) const;

  Arrangement arr_;
  std::vector<Poly2> form_polys_;
};

struct AnnihilatorCheck {
  bool ok = false;
  TwistedElement p_residual;  // P * alpha^beta
  TwistedElement q_residual;  // Q * alpha^beta
};

/// Applies P and Q to alpha^beta in the module of the normalized forms.
AnnihilatorCheck verify_annihilators(const AnnPair& ann, const NormalizedArrangement& arr);

/// One-variable twisted element sum_s coeff_s x^(beta + s), shifts >= 0.
struct A1Term {
  Scalar coefficient;
  long shift = 0;
};

/// Applies prod_{i=0}^{k-1} (x Dx - (beta + i)) to f in C[x]_x x^beta, where
/// k is the top shift of f; the result is coeff_k k! x^(beta + k).
TwistedElement euler_reduction_a1(const std::vector<A1Term>& f, const Scalar& beta1);

/// The module C[x]_x x^beta1 (the single form x) used by euler_reduction_a1.
TwistedModule a1_module(const Scalar& beta1);

}  // namespace dmod
