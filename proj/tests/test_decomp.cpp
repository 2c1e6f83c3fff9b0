#include <doctest.h>

#include <algorithm>
#include <vector>

#include "dmod/arrangement.hpp"
#include "dmod/decomp.hpp"
#include "dmod/errors.hpp"
#include "dmod/random.hpp"

using dmod::Arrangement;
using dmod::CaseTag;
using dmod::FactorSupport;
using dmod::LinearForm;
using dmod::Scalar;
using dmod::SupportKind;

namespace {

Scalar q(long n, long d) { return Scalar::fraction(n, d); }

Arrangement generic(std::vector<Scalar> beta) {
  Arrangement arr;
  arr.beta = std::move(beta);
  const std::size_t m = arr.beta.size();
  if (m >= 1) arr.forms.emplace_back(1, 0);
  if (m >= 2) arr.forms.emplace_back(0, 1);
  for (std::size_t i = 2; i < m; ++i) arr.forms.emplace_back(static_cast<long>(i - 1), 1);
  return arr;
}

// Count assembled the way the filtration argument does: the integer lines
// split off restrictions C[y]_y y^(beta_H) (2 factors when beta_H is an
// integer, else 1) and the remaining arrangement of m' non-integer lines
// contributes 1 factor plus m' - 2 origin factors when its sum is integral.
std::uint64_t filtration_count(const std::vector<Scalar>& beta) {
  std::size_t k = 0;
  Scalar rest = 0;
  for (const Scalar& b : beta) {
    if (b.is_integer())
      ++k;
    else
      rest += b;
  }
  const std::size_t m = beta.size();
  if (k == m) return 2 * m;  // every NBC subset contributes one factor
  const std::size_t m_rest = m - k;
  const std::uint64_t tilde = rest.is_integer() && m_rest >= 2 ? std::max<std::size_t>(1, m_rest - 1) : 1;
  return tilde + k * (rest.is_integer() ? 2 : 1);
}

std::vector<FactorSupport> sorted(std::vector<FactorSupport> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("count examples") {
  CHECK(dmod::count_factors(generic({1, 2, 3, 4, 5})).count == 10);
  auto r = dmod::count_factors(generic({q(1, 2), q(1, 2), 1}));
  CHECK(r.k == 1);
  CHECK(r.case_tag == CaseTag::SumInteger);
  CHECK(r.count == 3);
  CHECK(*r.beta_H == Scalar(1));
  r = dmod::count_factors(generic({q(1, 2), q(1, 2), q(1, 2)}));
  CHECK(r.case_tag == CaseTag::SumNonInteger);
  CHECK(r.count == 1);
  CHECK(dmod::count_factors(generic({q(1, 3), q(1, 3), q(1, 3)})).count == 2);
  r = dmod::count_factors(generic({0}));
  CHECK(r.count == 2);
  CHECK(r.case_tag == CaseTag::AllInteger);
  CHECK(r.nbc.size() == 2);
}

TEST_CASE("supports by case") {
  using V = std::vector<FactorSupport>;
  CHECK(dmod::factor_supports(CaseTag::AllInteger, 3, {0, 1, 2}) ==
        V{{SupportKind::Plane, 0, 1},
          {SupportKind::Line, 0, 1},
          {SupportKind::Line, 1, 1},
          {SupportKind::Line, 2, 1},
          {SupportKind::Origin, 0, 2}});
  CHECK(dmod::factor_supports(CaseTag::SumNonInteger, 4, {0, 1}) ==
        V{{SupportKind::Plane, 0, 1}, {SupportKind::Line, 0, 1}, {SupportKind::Line, 1, 1}});
  CHECK(dmod::factor_supports(CaseTag::SumInteger, 4, {0}) ==
        V{{SupportKind::Plane, 0, 1}, {SupportKind::Line, 0, 1}, {SupportKind::Origin, 0, 2}});
  CHECK_THROWS_AS(dmod::factor_supports(CaseTag::SumInteger, 3, {0, 1}), dmod::PreconditionError);
  CHECK_THROWS_AS(dmod::factor_supports(CaseTag::AllInteger, 3, {0}), dmod::PreconditionError);
  CHECK_THROWS_AS(dmod::factor_supports(CaseTag::SumNonInteger, 2, {0, 1}), dmod::PreconditionError);
}

TEST_CASE("restricted exponent") {
  CHECK(dmod::restricted_exponent(generic({0, q(1, 2), q(1, 2)}), {0}) == Scalar(1));
  CHECK(dmod::restricted_exponent(generic({2, q(1, 3)}), {0}) == q(1, 3));
  const Scalar z(dmod::Rational(1, 2), 1);
  CHECK(dmod::restricted_exponent(generic({0, z, z.conj()}), {0}) == Scalar(1));
  CHECK_THROWS_AS(dmod::restricted_exponent(generic({1, 2}), {0, 1}), dmod::PreconditionError);
}

TEST_CASE("small counting helpers") {
  CHECK(dmod::normal_crossings_count(0, 2, 2) == 1);
  CHECK(dmod::normal_crossings_count(2, 2, 2) == 4);
  CHECK(dmod::normal_crossings_count(1, 2, 2) == 2);
  CHECK_THROWS_AS(dmod::normal_crossings_count(1, 3, 2), dmod::PreconditionError);
  CHECK(dmod::external_product_count(2, 2) == 4);
  CHECK(dmod::external_product_count(1, 7) == 7);
  CHECK(dmod::external_product_count(2, 1) == 2);
  CHECK(dmod::multiplicity_bound(3, 2) == 16);
  CHECK(dmod::multiplicity_bound(0, 2) == 1);
  CHECK(dmod::multiplicity_bound(1, 1) == 2);
  CHECK_THROWS_AS(dmod::multiplicity_bound(1000, 10), dmod::PreconditionError);
}

TEST_CASE("normal crossings as external products") {
  // Coordinate lines in the plane: the module is the external product of
  // the one-variable modules, with 2 factors for an integer exponent and 1
  // otherwise.
  const std::vector<Scalar> values{0, q(1, 2), 3, q(-5, 2), Scalar(dmod::Rational(0), 1)};
  for (const Scalar& a : values) {
    CHECK(dmod::count_factors(generic({a})).count == (a.is_integer() ? 2u : 1u));
    for (const Scalar& b : values) {
      const std::uint64_t product = dmod::external_product_count(a.is_integer() ? 2 : 1, b.is_integer() ? 2 : 1);
      const auto r = dmod::count_factors(generic({a, b}));
      CHECK(r.count == product);
      CHECK(r.count == dmod::normal_crossings_count(r.k, 2, 2));
    }
  }
}

TEST_CASE("count against the filtration argument") {
  const std::vector<Scalar> values{0, 1, q(1, 2), q(1, 3), q(-5, 2), Scalar(dmod::Rational(1, 2), 1)};
  dmod::Rng rng(81);
  for (int n = 0; n < 2000; ++n) {
    const std::size_t m = 1 + rng.below(7);
    std::vector<Scalar> beta;
    for (std::size_t i = 0; i < m; ++i) beta.push_back(values[rng.below(values.size())]);
    const auto r = dmod::count_factors(generic(beta));
    CHECK(r.count == filtration_count(beta));
    CHECK(r.multiplicity_total() == r.count);
    if (r.case_tag == CaseTag::AllInteger) CHECK(r.nbc.size() == r.count);
  }
}

TEST_CASE("simple exactly in the two documented cases") {
  const std::vector<Scalar> values{0, q(1, 2), q(1, 3), q(2, 3)};
  dmod::Rng rng(83);
  for (int n = 0; n < 1000; ++n) {
    const std::size_t m = 1 + rng.below(6);
    std::vector<Scalar> beta;
    for (std::size_t i = 0; i < m; ++i) beta.push_back(values[rng.below(values.size())]);
    const auto r = dmod::count_factors(generic(beta));
    Scalar sum = 0;
    for (const Scalar& b : beta) sum += b;
    const bool expected = (m <= 2 && r.k == 0) || (m >= 3 && r.k == 0 && !sum.is_integer());
    CHECK((r.count == 1) == expected);
  }
}

TEST_CASE("invariance under coordinates and reordering") {
  dmod::Rng rng(85);
  for (int n = 0; n < 40; ++n) {
    const std::size_t m = 1 + rng.below(6);
    Arrangement arr;
    arr.forms.emplace_back(1, 0);
    if (m >= 2) arr.forms.emplace_back(0, 1);
    for (const Scalar& c : rng.slopes(m, 5, 4)) arr.forms.emplace_back(c, 1);
    for (std::size_t i = 0; i < m; ++i)
      arr.beta.push_back(rng.coin() ? Scalar(rng.between(-3, 3)) : rng.non_integer(5, 4));
    const auto base = dmod::count_factors(arr);

    const auto moved = dmod::count_factors(dmod::change_coordinates(arr, rng.invertible_matrix()));
    CHECK(moved.count == base.count);
    CHECK(moved.factors == base.factors);

    const auto perm = rng.permutation(m);
    const auto permuted = dmod::count_factors(dmod::permute(arr, perm));
    CHECK(permuted.count == base.count);
    // Line supports follow the permutation.
    std::vector<FactorSupport> mapped = permuted.factors;
    for (FactorSupport& f : mapped)
      if (f.kind == SupportKind::Line) f.line = perm[f.line];
    CHECK(sorted(mapped) == sorted(base.factors));
  }
}

TEST_CASE("report notes") {
  const auto r = dmod::count_factors(generic({q(1, 2), q(1, 2), 1, q(1, 3), q(2, 3)}));
  CHECK(r.case_tag == CaseTag::SumInteger);
  CHECK(r.count == 5);
  REQUIRE(!r.notes.empty());
  CHECK(r.notes[0].find("origin factors") != std::string::npos);
  const auto two = dmod::count_factors(generic({0, q(1, 2)}));
  CHECK(two.notes.back().find("2^k = 2") != std::string::npos);
}

TEST_CASE("invalid arrangements are rejected") {
  CHECK_THROWS_AS(dmod::count_factors(Arrangement{{LinearForm(1, 0), LinearForm(2, 0)}, {0, 0}}),
                  dmod::DuplicateLine);
  CHECK_THROWS_AS(dmod::count_factors(Arrangement{{LinearForm(1, 0)}, {0, 0}}), dmod::LengthMismatch);
}

TEST_CASE("image cones") {
  using dmod::ConeAxis;
  CHECK(dmod::image_basis_descriptor({0, 1}, 3).to_string() == "a1 <= -1, a2 <= -1");
  CHECK(dmod::image_basis_descriptor({}, 3).to_string() == "x >= 0, y >= 0");
  CHECK(dmod::image_basis_descriptor({0}, 3).to_string() == "y >= 0, a1 <= -1");
  CHECK(dmod::image_basis_descriptor({1}, 3).to_string() == "x >= 0, a2 <= -1");
  CHECK(dmod::image_basis_descriptor({2}, 3).to_string() == "y >= 0, a3 <= -1");
  CHECK_THROWS_AS(dmod::image_basis_descriptor({1, 2}, 3), dmod::PreconditionError);
  for (std::size_t m = 1; m <= 6; ++m)
    for (const auto& s : dmod::nbc_subsets(m)) {
      const auto cone = dmod::image_basis_descriptor(s, m);
      CHECK(cone.axes.size() == 2);
      const auto negatives = std::count_if(cone.axes.begin(), cone.axes.end(), [](const ConeAxis& a) {
        return a.bound == ConeAxis::Bound::Negative;
      });
      CHECK(static_cast<std::size_t>(negatives) == s.size());
    }
}
