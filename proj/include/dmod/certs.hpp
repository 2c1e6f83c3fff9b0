#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dmod/scalar.hpp"
#include "dmod/weyl.hpp"

namespace dmod {

/// Exact identity  sum_t left_t * right_t = result  between Weyl operators.
/// The right factors are ideal members; the identity shows result belongs
/// to the same left ideal.
struct IdentityStep {
  std::vector<std::pair<WeylOp, WeylOp>> products;
  WeylOp result;
  std::string note;

  bool holds() const;
  std::string to_string() const;
};

enum class ChainConclusion { IdealIsFull, ReducedGenerators };

/// Reduction certificate for J = A1 (y Dy - gamma) + A1 y^k in C<y, Dy>.
/// Every step is re-verified when the chain is built.
struct MembershipChain {
  Scalar gamma;
  unsigned k = 0;
  std::vector<IdentityStep> steps;
  ChainConclusion conclusion = ChainConclusion::IdealIsFull;
  // Generators of J after the reduction: {1} when the ideal is full,
  // {y Dy - gamma, y^|gamma|} otherwise.
  std::vector<WeylOp> generators;

  bool verify() const;
  std::string to_string() const;
};

/// Lowers y^k one power at a time through
///   Dy y^p - y^(p-1) (y Dy - gamma) = (p + gamma) y^(p-1),
/// stopping when p + gamma = 0. Reaching y^0 = 1 means J = A1. For k = 0
/// the generator y^0 is already the unit and the chain is empty.
MembershipChain reduce_power_chain(const Scalar& gamma, unsigned k);

struct IdealSimplification {
  WeylOp G;             // Q = G x + tail
  WeylOp tail;          // y^(m-1) Dy - (sum_{i>=2} beta_i) y^(m-2)
  std::vector<IdentityStep> steps;
  // x, y Dy - (|beta| + 1), y^(m-2)
  std::vector<WeylOp> generators;

  bool verify() const;
};

/// Rewrites A2 x + A2 P + A2 Q into A2 x + A2 (y Dy - (|beta|+1)) +
/// A2 y^(m-2). Throws PreconditionError when beta_1 + 1 = 0.
IdealSimplification simplify_ideal(const AnnPair& ann);

enum class QuotientClass { Zero, NonzeroSimple };

/// NonzeroSimple iff |beta| + 1 is an integer in [-(m-2), -1].
QuotientClass quotient_class(const Scalar& beta_sum, std::size_t m);

/// The same classification obtained by running simplify_ideal and then
/// reduce_power_chain(|beta| + 1, m - 2) on the y-part.
QuotientClass quotient_class_via_certificates(const AnnPair& ann);

const char* to_string(ChainConclusion c);
const char* to_string(QuotientClass c);

}  // namespace dmod
