#include "dmod/decomp.hpp"

#include <algorithm>
#include <limits>

#include "dmod/errors.hpp"

namespace dmod {

const char* to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::AllInteger:
      return "AllInteger";
    case CaseTag::SumInteger:
      return "SumInteger";
    case CaseTag::SumNonInteger:
      return "SumNonInteger";
  }
  return "?";
}

const char* to_string(SupportKind kind) {
  switch (kind) {
    case SupportKind::Plane:
      return "Plane";
    case SupportKind::Line:
      return "Line";
    case SupportKind::Origin:
      return "Origin";
  }
  return "?";
}

std::uint64_t DecompositionReport::multiplicity_total() const {
  std::uint64_t total = 0;
  for (const FactorSupport& f : factors) total += f.multiplicity;
  return total;
}

std::vector<FactorSupport> factor_supports(CaseTag tag, std::size_t m,
                                           const std::vector<std::size_t>& integer_indices) {
  const std::size_t k = integer_indices.size();
  if (m == 0 || k > m) throw PreconditionError("factor_supports: need 0 <= k <= m, m >= 1");
  for (std::size_t s : integer_indices)
    if (s >= m) throw PreconditionError("factor_supports: line index out of range");

  std::size_t origin = 0;
  switch (tag) {
    case CaseTag::AllInteger:
      if (k != m) throw PreconditionError("AllInteger requires k = m");
      origin = m - 1;
      break;
    case CaseTag::SumInteger:
      if (k == m) throw PreconditionError("SumInteger requires k < m");
      if (m - k == 1)
        throw PreconditionError("SumInteger is impossible with exactly one non-integer exponent");
      origin = m - 2;
      break;
    case CaseTag::SumNonInteger:
      if (k == m) throw PreconditionError("SumNonInteger requires k < m");
      break;
  }

  std::vector<FactorSupport> out{{SupportKind::Plane, 0, 1}};
  std::vector<std::size_t> lines = integer_indices;
  std::sort(lines.begin(), lines.end());
  for (std::size_t s : lines) out.push_back({SupportKind::Line, s, 1});
  if (origin > 0) out.push_back({SupportKind::Origin, 0, origin});
  return out;
}

Scalar restricted_exponent(const Arrangement& arr, const std::vector<std::size_t>& integer_indices) {
  if (integer_indices.size() >= arr.beta.size())
    throw PreconditionError("restricted exponent needs a non-integer exponent");
  Scalar total = 0;
  for (std::size_t i = 0; i < arr.beta.size(); ++i)
    if (std::find(integer_indices.begin(), integer_indices.end(), i) == integer_indices.end())
      total += arr.beta[i];
  return total;
}

DecompositionReport count_factors(const Arrangement& arr) {
  validate(arr);
  const std::size_t m = arr.size();
  const IntegerCount ic = integer_count(arr);

  DecompositionReport report;
  report.m = m;
  report.k = ic.k;
  report.integer_indices = ic.indices;
  if (ic.k == m) {
    report.case_tag = CaseTag::AllInteger;
    report.count = 2 * m;
    report.nbc = nbc_subsets(m);
  } else {
    const bool sum_integer = arr.beta_sum().is_integer();
    report.beta_H = restricted_exponent(arr, ic.indices);
    if (report.beta_H->is_integer() != sum_integer)
      throw Error("restricted exponent and exponent sum disagree on integrality");
    report.case_tag = sum_integer ? CaseTag::SumInteger : CaseTag::SumNonInteger;
    report.count = sum_integer ? m + ic.k - 1 : ic.k + 1;
  }
  report.factors = factor_supports(report.case_tag, m, ic.indices);
  if (report.multiplicity_total() != report.count)
    throw Error("support accounting does not add up to the factor count");

  if (report.case_tag == CaseTag::AllInteger) {
    report.notes.push_back("factors indexed by the " + std::to_string(report.nbc.size()) +
                           " no-broken-circuit subsets");
  } else if (report.case_tag == CaseTag::SumInteger) {
    report.notes.push_back("origin factors: " + std::to_string(ic.k) +
                           " from the integer lines (restricted exponent is an integer) plus " +
                           std::to_string(m - ic.k - 2) + " from the non-integer part");
  }
  if (m <= 2)
    report.notes.push_back("normal crossings: count equals 2^k = " +
                           std::to_string(normal_crossings_count(ic.k, m, 2)));
  return report;
}

std::uint64_t normal_crossings_count(std::size_t k, std::size_t m, std::size_t n) {
  if (m > n) throw PreconditionError("normal crossings needs m <= n");
  if (k > m) throw PreconditionError("normal crossings needs k <= m");
  if (k >= 64) throw PreconditionError("2^k overflows");
  return std::uint64_t{1} << k;
}

std::uint64_t external_product_count(std::uint64_t c_left, std::uint64_t c_right) {
  if (c_left == 0 || c_right == 0) throw PreconditionError("factor counts are positive");
  return c_left * c_right;
}

std::uint64_t multiplicity_bound(std::uint64_t m, std::uint64_t n) {
  std::uint64_t out = 1;
  for (std::uint64_t e = 0; e < n; ++e) {
    if (out > std::numeric_limits<std::uint64_t>::max() / (m + 1))
      throw PreconditionError("multiplicity bound overflows");
    out *= m + 1;
  }
  return out;
}

std::string ImageCone::to_string() const {
  std::string out;
  for (const ConeAxis& a : axes) {
    if (!out.empty()) out += ", ";
    switch (a.base) {
      case ConeAxis::Base::X:
        out += "x";
        break;
      case ConeAxis::Base::Y:
        out += "y";
        break;
      case ConeAxis::Base::Form:
        out += "a" + std::to_string(a.form + 1);
        break;
    }
    out += a.bound == ConeAxis::Bound::NonNegative ? " >= 0" : " <= -1";
  }
  return out;
}

ImageCone image_basis_descriptor(const std::vector<std::size_t>& subset, std::size_t m) {
  const auto nbc = nbc_subsets(m);
  if (std::find(nbc.begin(), nbc.end(), subset) == nbc.end())
    throw PreconditionError("subset is not a no-broken-circuit subset");
  using Base = ConeAxis::Base;
  using Bound = ConeAxis::Bound;
  ImageCone cone;
  if (subset.empty()) {
    cone.axes = {{Base::X, 0, Bound::NonNegative}, {Base::Y, 0, Bound::NonNegative}};
  } else if (subset.size() == 1) {
    const std::size_t i = subset[0];
    const Base complement = i == 1 ? Base::X : Base::Y;
    cone.axes = {{complement, 0, Bound::NonNegative}, {Base::Form, i, Bound::Negative}};
  } else {
    cone.axes = {{Base::Form, subset[0], Bound::Negative}, {Base::Form, subset[1], Bound::Negative}};
  }
  return cone;
}

}  // namespace dmod
