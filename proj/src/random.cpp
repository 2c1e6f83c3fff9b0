#include "dmod/random.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace dmod {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n <= 1) return 0;
  // Rejection sampling keeps draws unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return v % n;
}

long Rng::between(long lo, long hi) {
  return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

Rational Rng::rational(long max_abs_num, long max_den) {
  Rational q(between(-max_abs_num, max_abs_num), between(1, max_den));
  q.canonicalize();
  return q;
}

Rational Rng::nonzero_rational(long max_abs_num, long max_den) {
  long num = 0;
  while (num == 0) num = between(-max_abs_num, max_abs_num);
  Rational q(num, between(1, max_den));
  q.canonicalize();
  return q;
}

Scalar Rng::gaussian(long max_abs_num, long max_den, bool allow_imaginary) {
  Rational re = rational(max_abs_num, max_den);
  Rational im = allow_imaginary && coin() ? rational(max_abs_num, max_den) : Rational(0);
  return Scalar(re, im);
}

Scalar Rng::non_integer(long max_abs_num, long max_den) {
  for (;;) {
    Scalar s = gaussian(max_abs_num, std::max(2L, max_den));
    if (!s.is_integer()) return s;
  }
}

WeylMonomial Rng::monomial(unsigned max_degree) {
  const unsigned degree = static_cast<unsigned>(below(max_degree + 1));
  // Split degree among the four exponents.
  std::array<unsigned, 4> e{};
  for (unsigned d = 0; d < degree; ++d) ++e[below(4)];
  return {e[0], e[1], e[2], e[3]};
}

WeylOp Rng::weyl_op(unsigned max_degree, unsigned max_terms) {
  WeylOp op;
  const unsigned terms = 1 + static_cast<unsigned>(below(max_terms));
  for (unsigned t = 0; t < terms; ++t) op.add_term(monomial(max_degree), gaussian(5, 4));
  return op;
}

Poly2 Rng::poly(unsigned max_degree, unsigned max_terms) {
  Poly2 p;
  const unsigned terms = 1 + static_cast<unsigned>(below(max_terms));
  for (unsigned t = 0; t < terms; ++t) {
    const unsigned dx = static_cast<unsigned>(below(max_degree + 1));
    const unsigned dy = static_cast<unsigned>(below(max_degree + 1 - dx));
    p.add_term({dx, dy}, gaussian(5, 4));
  }
  return p;
}

std::vector<Scalar> Rng::slopes(std::size_t m, long max_abs_num, long max_den) {
  std::vector<Scalar> out;
  while (out.size() + 2 < m) {
    Scalar c(nonzero_rational(max_abs_num, max_den));
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  return out;
}

Matrix2 Rng::invertible_matrix() {
  for (;;) {
    Matrix2 t{{{Scalar(rational(4, 3)), Scalar(rational(4, 3))},
               {Scalar(rational(4, 3)), Scalar(rational(4, 3))}}};
    if (!(t[0][0] * t[1][1] - t[0][1] * t[1][0]).is_zero()) return t;
  }
}

std::vector<std::size_t> Rng::permutation(std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[below(i)]);
  return p;
}

}  // namespace dmod
