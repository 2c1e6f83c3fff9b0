#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "dmod/poly.hpp"
#include "dmod/scalar.hpp"

namespace dmod {

/// Central line arrangement in C^2 with one exponent per line.
struct Arrangement {
  std::vector<LinearForm> forms;
  std::vector<Scalar> beta;

  std::size_t size() const { return forms.size(); }
  Scalar beta_sum() const;
};

/// Throws LengthMismatch, DuplicateLine, or PreconditionError (no forms).
/// Returns the arrangement unchanged on success.
const Arrangement& validate(const Arrangement& arr);

/// Replaces each exponent by its representative mod Z: integers become 0,
/// other values keep their imaginary part and move the real part into [0, 1).
Arrangement normalize_beta(const Arrangement& arr);

struct IntegerCount {
  std::size_t k = 0;
  std::vector<std::size_t> indices;  // 0-based
};

IntegerCount integer_count(const Arrangement& arr);

using Matrix2 = std::array<std::array<Scalar, 2>, 2>;

/// Arrangement in coordinates where the forms read x, y, c_3 x + y, ...,
/// c_m x + y.
///
/// change_of_basis() holds the rows of the first two input forms, i.e. the
/// new coordinates are (u, v) = change_of_basis() * (x, y). The input form i
/// equals scale()[i] times normalized form i.
class NormalizedArrangement {
 public:
  const Arrangement& base() const { return base_; }
  const Matrix2& change_of_basis() const { return basis_; }
  const std::vector<Scalar>& slopes() const { return slopes_; }  // c_3..c_m
  const std::vector<Scalar>& scale() const { return scale_; }
  const std::vector<Scalar>& beta() const { return base_.beta; }
  std::size_t size() const { return base_.size(); }

  // The forms x, y, c_i x + y.
  std::vector<LinearForm> forms() const;
  // The arrangement (forms(), beta()).
  Arrangement as_arrangement() const;

  /// Build directly from slopes; used for arrangements already in normal
  /// position. Throws PreconditionError on zero or repeated slopes.
  static NormalizedArrangement from_slopes(std::vector<Scalar> slopes, std::vector<Scalar> beta);

 private:
  friend NormalizedArrangement normalize_coordinates(const Arrangement& arr);

  Arrangement base_;
  Matrix2 basis_{};
  std::vector<Scalar> slopes_;
  std::vector<Scalar> scale_;
};

/// Sends the first form to x and the second to y, then rescales the others
/// to y-coefficient 1. Requires a validated arrangement with m >= 2.
NormalizedArrangement normalize_coordinates(const Arrangement& arr);

/// Checks that the forms are literally x, y, c_i x + y with distinct nonzero
/// c_i and returns the normalized view; throws PreconditionError otherwise.
NormalizedArrangement as_normalized(const Arrangement& arr);

/// Pulls the forms back along the linear map T: (a, b) becomes (a, b) * T.
Arrangement change_coordinates(const Arrangement& arr, const Matrix2& t);

/// Reorders forms and exponents jointly: result form i is input form perm[i].
Arrangement permute(const Arrangement& arr, const std::vector<std::size_t>& perm);

/// Independent sets without broken circuits for a plane arrangement of m
/// lines, in the order {}, {1}, ..., {m}, {1,2}, ..., {1,m} (0-based here).
std::vector<std::vector<std::size_t>> nbc_subsets(std::size_t m);

}  // namespace dmod
