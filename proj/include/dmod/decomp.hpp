#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dmod/arrangement.hpp"
#include "dmod/scalar.hpp"

namespace dmod {

enum class SupportKind { Plane, Line, Origin };

struct FactorSupport {
  SupportKind kind = SupportKind::Plane;
  std::size_t line = 0;  // 0-based form index, meaningful for Line
  std::size_t multiplicity = 1;

  friend auto operator<=>(const FactorSupport&, const FactorSupport&) = default;
};

enum class CaseTag { AllInteger, SumInteger, SumNonInteger };

const char* to_string(CaseTag tag);
const char* to_string(SupportKind kind);

struct DecompositionReport {
  std::size_t m = 0;
  std::uint64_t count = 0;
  std::vector<FactorSupport> factors;
  CaseTag case_tag = CaseTag::AllInteger;
  std::size_t k = 0;
  std::vector<std::size_t> integer_indices;            // 0-based
  std::optional<Scalar> beta_H;                        // when k < m
  std::vector<std::vector<std::size_t>> nbc;           // when k == m
  std::vector<std::string> notes;

  std::uint64_t multiplicity_total() const;
};

/// Number and supports of the decomposition factors of the twisted module
/// of a plane arrangement: 2m when every exponent is an integer, otherwise
/// m + k - 1 or k + 1 according to whether the exponent sum is an integer.
DecompositionReport count_factors(const Arrangement& arr);

/// Supports for a case: one plane factor, one line factor per integer
/// exponent, and m - 1 (all integer) / m - 2 (integer sum) / 0 origin
/// factors. Throws PreconditionError on inconsistent input.
std::vector<FactorSupport> factor_supports(CaseTag tag, std::size_t m,
                                           const std::vector<std::size_t>& integer_indices);

/// Sum of the non-integer exponents. Throws PreconditionError when every
/// exponent is an integer.
Scalar restricted_exponent(const Arrangement& arr, const std::vector<std::size_t>& integer_indices);

/// 2^k for the coordinate-hyperplane case m <= n.
std::uint64_t normal_crossings_count(std::size_t k, std::size_t m, std::size_t n);

std::uint64_t external_product_count(std::uint64_t c_left, std::uint64_t c_right);

/// (m + 1)^n.
std::uint64_t multiplicity_bound(std::uint64_t m, std::uint64_t n);

/// One axis of the exponent cone spanning the image of a simple factor:
/// the exponent of `base` ranges over >= 0 or <= -1.
struct ConeAxis {
  enum class Base { X, Y, Form } base = Base::X;
  std::size_t form = 0;  // 0-based, for Base::Form
  enum class Bound { NonNegative, Negative } bound = Bound::NonNegative;

  friend bool operator==(const ConeAxis&, const ConeAxis&) = default;
};

struct ImageCone {
  std::vector<ConeAxis> axes;  // always two
  std::string to_string() const;
};

/// Monomial cone of the image of L_S in the polar filtration, in normalized
/// coordinates (form 1 = x, form 2 = y). The complement of form 2 is x, of
/// every other form y.
ImageCone image_basis_descriptor(const std::vector<std::size_t>& subset, std::size_t m);

}  // namespace dmod
