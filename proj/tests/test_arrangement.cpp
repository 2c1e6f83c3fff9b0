#include <doctest.h>

#include <algorithm>
#include <vector>

#include "dmod/arrangement.hpp"
#include "dmod/errors.hpp"
#include "dmod/random.hpp"

using dmod::Arrangement;
using dmod::LinearForm;
using dmod::Scalar;

namespace {

Scalar q(long n, long d) { return Scalar::fraction(n, d); }

Arrangement xy_xy(std::vector<Scalar> beta) {
  return {{LinearForm(1, 0), LinearForm(0, 1), LinearForm(1, 1)}, std::move(beta)};
}

}  // namespace

TEST_CASE("validation") {
  CHECK_NOTHROW(dmod::validate(xy_xy({1, 2, 3})));
  CHECK_THROWS_AS(dmod::validate(Arrangement{{LinearForm(1, 0), LinearForm(2, 0)}, {0, 0}}),
                  dmod::DuplicateLine);
  CHECK_THROWS_AS(dmod::validate(Arrangement{{LinearForm(1, 0), LinearForm(0, 1)}, {0, 0, 0}}),
                  dmod::LengthMismatch);
  CHECK_THROWS_AS(dmod::validate(Arrangement{}), dmod::PreconditionError);
  try {
    dmod::validate(Arrangement{{LinearForm(1, 0), LinearForm(0, 1), LinearForm(0, 3)}, {0, 0, 0}});
    FAIL("expected DuplicateLine");
  } catch (const dmod::DuplicateLine& e) {
    CHECK(e.first() == 1);
    CHECK(e.second() == 2);
  }
}

TEST_CASE("exponents modulo integers") {
  auto reduced = [](std::vector<Scalar> beta) {
    Arrangement arr{std::vector<LinearForm>(beta.size(), LinearForm(1, 0)), beta};
    return dmod::normalize_beta(arr).beta;
  };
  CHECK(reduced({3, q(1, 2)}) == std::vector<Scalar>{0, q(1, 2)});
  CHECK(reduced({0, 0}) == std::vector<Scalar>{0, 0});
  CHECK(reduced({q(5, 2), -1}) == std::vector<Scalar>{q(1, 2), 0});
  CHECK(reduced({q(-7, 3)}) == std::vector<Scalar>{q(2, 3)});
  const Scalar z(dmod::Rational(7, 4), dmod::Rational(-2));
  CHECK(reduced({z}) == std::vector<Scalar>{Scalar(dmod::Rational(3, 4), dmod::Rational(-2))});
  // Purely imaginary values have no integer part to remove.
  CHECK(reduced({Scalar::imaginary_unit()}) == std::vector<Scalar>{Scalar::imaginary_unit()});

  dmod::Rng rng(4);
  for (int n = 0; n < 200; ++n) {
    const Scalar b = rng.gaussian(30, 9);
    const Scalar r = reduced({b})[0];
    CHECK((b - r).is_integer());
    CHECK(r.re() >= 0);
    CHECK(r.re() < 1);
  }
}

TEST_CASE("integer exponents") {
  auto count = [](std::vector<Scalar> beta) {
    return dmod::integer_count(Arrangement{std::vector<LinearForm>(beta.size(), LinearForm(1, 0)), beta});
  };
  auto c = count({0, q(1, 2), q(1, 3)});
  CHECK(c.k == 1);
  CHECK(c.indices == std::vector<std::size_t>{0});
  CHECK(count({1, 2, 3}).k == 3);
  c = count({Scalar(dmod::Rational(1, 2), 1), 0});
  CHECK(c.k == 1);
  CHECK(c.indices == std::vector<std::size_t>{1});
}

TEST_CASE("coordinate normalization examples") {
  auto n = dmod::normalize_coordinates(xy_xy({0, 0, 0}));
  CHECK(n.slopes() == std::vector<Scalar>{1});

  // [y, x, x + 2y]: u = y, v = x, so x + 2y = 2u + v.
  n = dmod::normalize_coordinates(
      Arrangement{{LinearForm(0, 1), LinearForm(1, 0), LinearForm(1, 2)}, {0, 0, 0}});
  CHECK(n.slopes() == std::vector<Scalar>{2});
  CHECK(n.scale() == std::vector<Scalar>{1, 1, 1});

  // [x + y, x - y, x]: x = (u + v) / 2.
  n = dmod::normalize_coordinates(
      Arrangement{{LinearForm(1, 1), LinearForm(1, -1), LinearForm(1, 0)}, {0, 0, 0}});
  CHECK(n.slopes() == std::vector<Scalar>{1});
  CHECK(n.scale() == std::vector<Scalar>{1, 1, q(1, 2)});
  CHECK(dmod::pairwise_independent(n.forms()));
}

TEST_CASE("normalization reconstructs the input forms") {
  // Oracle: form i must equal scale_i * (c_i u + v) with u, v the first two
  // input forms, checked coefficientwise in the original coordinates.
  dmod::Rng rng(12);
  for (int t = 0; t < 100; ++t) {
    const std::size_t m = 2 + rng.below(5);
    Arrangement base{{}, std::vector<Scalar>(m, 0)};
    base.forms.emplace_back(1, 0);
    base.forms.emplace_back(0, 1);
    for (const Scalar& c : rng.slopes(m, 6, 5)) base.forms.emplace_back(c, 1);
    const Arrangement arr = dmod::change_coordinates(base, rng.invertible_matrix());
    const auto n = dmod::normalize_coordinates(arr);
    const auto& basis = n.change_of_basis();
    const auto forms = n.forms();
    for (std::size_t i = 0; i < m; ++i) {
      const Scalar a = n.scale()[i] * (forms[i].a() * basis[0][0] + forms[i].b() * basis[1][0]);
      const Scalar b = n.scale()[i] * (forms[i].a() * basis[0][1] + forms[i].b() * basis[1][1]);
      CHECK(a == arr.forms[i].a());
      CHECK(b == arr.forms[i].b());
    }
  }
}

TEST_CASE("normalized views") {
  auto n = dmod::as_normalized(xy_xy({1, 2, 3}));
  CHECK(n.slopes() == std::vector<Scalar>{1});
  CHECK_THROWS_AS(dmod::as_normalized(Arrangement{{LinearForm(0, 1), LinearForm(1, 0)}, {0, 0}}),
                  dmod::PreconditionError);
  CHECK_THROWS_AS(dmod::NormalizedArrangement::from_slopes({0}, {0, 0, 0}), dmod::PreconditionError);
  CHECK_THROWS_AS(dmod::NormalizedArrangement::from_slopes({1, 1}, {0, 0, 0, 0}),
                  dmod::PreconditionError);
  CHECK_THROWS_AS(dmod::NormalizedArrangement::from_slopes({1}, {0, 0}), dmod::LengthMismatch);
  CHECK_THROWS_AS(dmod::normalize_coordinates(Arrangement{{LinearForm(1, 0)}, {0}}),
                  dmod::PreconditionError);
}

TEST_CASE("permutation and change of coordinates") {
  const Arrangement arr = xy_xy({q(1, 2), q(1, 3), 1});
  const Arrangement p = dmod::permute(arr, {2, 0, 1});
  CHECK(p.forms[0] == LinearForm(1, 1));
  CHECK(p.beta[0] == Scalar(1));
  CHECK(p.beta[1] == q(1, 2));
  CHECK_THROWS_AS(dmod::permute(arr, {0, 1}), dmod::LengthMismatch);

  const dmod::Matrix2 swap{{{0, 1}, {1, 0}}};
  const Arrangement s = dmod::change_coordinates(arr, swap);
  CHECK(s.forms[0] == LinearForm(0, 1));
  CHECK(s.forms[1] == LinearForm(1, 0));
  const dmod::Matrix2 singular{{{1, 2}, {2, 4}}};
  CHECK_THROWS_AS(dmod::change_coordinates(arr, singular), dmod::PreconditionError);
}

TEST_CASE("nbc subsets") {
  using Subsets = std::vector<std::vector<std::size_t>>;
  CHECK(dmod::nbc_subsets(1) == Subsets{{}, {0}});
  CHECK(dmod::nbc_subsets(2).size() == 4);
  CHECK(dmod::nbc_subsets(3) == Subsets{{}, {0}, {1}, {2}, {0, 1}, {0, 2}});
  CHECK_THROWS_AS(dmod::nbc_subsets(0), dmod::PreconditionError);

  // Brute force: every triple of lines is a circuit, so a pair {i, j} with
  // i < j is broken exactly when some index below i exists.
  for (std::size_t m = 1; m <= 9; ++m) {
    std::size_t brute = 0;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      const int size = __builtin_popcount(mask);
      if (size > 2) continue;  // rank 2
      if (size < 2) {
        ++brute;
        continue;
      }
      std::size_t lo = m;
      for (std::size_t i = 0; i < m; ++i)
        if (mask & (1u << i)) {
          lo = i;
          break;
        }
      if (m < 3 || lo == 0) ++brute;
    }
    CHECK(dmod::nbc_subsets(m).size() == brute);
    CHECK(brute == 2 * m);
  }
}
