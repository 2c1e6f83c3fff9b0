#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dmod/arrangement.hpp"
#include "dmod/scalar.hpp"
#include "dmod/weyl.hpp"

namespace dmod {

// Seeded source for the randomized suites. Draws are built from raw
// mt19937_64 output so a seed gives the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t n);             // [0, n)
  long between(long lo, long hi);                   // [lo, hi]
  bool coin() { return below(2) == 1; }

  Rational rational(long max_abs_num, long max_den);
  // Nonzero num/den with |num| <= max_abs_num, 1 <= den <= max_den.
  Rational nonzero_rational(long max_abs_num, long max_den);
  Scalar gaussian(long max_abs_num, long max_den, bool allow_imaginary = true);
  // Gaussian rational that is not an integer.
  Scalar non_integer(long max_abs_num, long max_den);

  WeylMonomial monomial(unsigned max_degree);
  WeylOp weyl_op(unsigned max_degree, unsigned max_terms);
  Poly2 poly(unsigned max_degree, unsigned max_terms);

  // Distinct nonzero rational slopes c_3..c_m.
  std::vector<Scalar> slopes(std::size_t m, long max_abs_num, long max_den);
  // Invertible 2x2 matrix with small rational entries.
  Matrix2 invertible_matrix();
  std::vector<std::size_t> permutation(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace dmod
