#include "dmod/arrangement.hpp"

#include "dmod/errors.hpp"

namespace dmod {

Scalar Arrangement::beta_sum() const {
  Scalar total = 0;
  for (const Scalar& b : beta) total += b;
  return total;
}

const Arrangement& validate(const Arrangement& arr) {
  if (arr.forms.size() != arr.beta.size()) throw LengthMismatch(arr.forms.size(), arr.beta.size());
  if (arr.forms.empty()) throw PreconditionError("arrangement has no forms");
  for (std::size_t i = 0; i < arr.forms.size(); ++i)
    for (std::size_t j = i + 1; j < arr.forms.size(); ++j)
      if (proportional(arr.forms[i], arr.forms[j])) throw DuplicateLine(i, j);
  return arr;
}

Arrangement normalize_beta(const Arrangement& arr) {
  Arrangement out = arr;
  for (Scalar& b : out.beta) {
    if (b.is_integer()) {
      b = Scalar(0);
      continue;
    }
    mpz_class floor;
    mpz_fdiv_q(floor.get_mpz_t(), b.re().get_num_mpz_t(), b.re().get_den_mpz_t());
    b = Scalar(b.re() - Rational(floor), b.im());
  }
  return out;
}

IntegerCount integer_count(const Arrangement& arr) {
  IntegerCount out;
  for (std::size_t i = 0; i < arr.beta.size(); ++i)
    if (arr.beta[i].is_integer()) out.indices.push_back(i);
  out.k = out.indices.size();
  return out;
}

std::vector<LinearForm> NormalizedArrangement::forms() const {
  std::vector<LinearForm> out{LinearForm(1, 0), LinearForm(0, 1)};
  for (const Scalar& c : slopes_) out.emplace_back(c, 1);
  return out;
}

Arrangement NormalizedArrangement::as_arrangement() const { return {forms(), beta()}; }

NormalizedArrangement NormalizedArrangement::from_slopes(std::vector<Scalar> slopes,
                                                         std::vector<Scalar> beta) {
  for (std::size_t s = 0; s < slopes.size(); ++s) {
    if (slopes[s].is_zero()) throw PreconditionError("zero slope");
    for (std::size_t t = s + 1; t < slopes.size(); ++t)
      if (slopes[s] == slopes[t]) throw PreconditionError("repeated slope");
  }
  NormalizedArrangement out;
  out.slopes_ = std::move(slopes);
  out.base_.beta = std::move(beta);
  out.base_.forms = out.forms();
  validate(out.base_);
  out.basis_ = {{{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}}};
  out.scale_.assign(out.base_.size(), Scalar(1));
  return out;
}

NormalizedArrangement normalize_coordinates(const Arrangement& arr) {
  validate(arr);
  if (arr.size() < 2) throw PreconditionError("coordinate normalization needs at least two forms");

  const LinearForm& f1 = arr.forms[0];
  const LinearForm& f2 = arr.forms[1];
  const Scalar det = f1.a() * f2.b() - f1.b() * f2.a();
  if (det.is_zero()) throw DuplicateLine(0, 1);

  NormalizedArrangement out;
  out.base_ = arr;
  out.basis_ = {{{f1.a(), f1.b()}, {f2.a(), f2.b()}}};
  out.scale_ = {Scalar(1), Scalar(1)};

  // Row (a, b) of form i equals (p, q) * basis, so form i = p u + q v.
  for (std::size_t i = 2; i < arr.size(); ++i) {
    const LinearForm& f = arr.forms[i];
    const Scalar p = (f.a() * f2.b() - f.b() * f2.a()) / det;
    const Scalar q = (f.b() * f1.a() - f.a() * f1.b()) / det;
    if (p.is_zero()) throw DuplicateLine(1, i);
    if (q.is_zero()) throw DuplicateLine(0, i);
    out.slopes_.push_back(p / q);
    out.scale_.push_back(q);
  }
  return out;
}

NormalizedArrangement as_normalized(const Arrangement& arr) {
  validate(arr);
  if (arr.size() < 2) throw PreconditionError("normalized arrangements have at least two forms");
  if (!(arr.forms[0] == LinearForm(1, 0)) || !(arr.forms[1] == LinearForm(0, 1)))
    throw PreconditionError("first two forms must be x and y");
  std::vector<Scalar> slopes;
  for (std::size_t i = 2; i < arr.size(); ++i) {
    if (!(arr.forms[i].b() == Scalar(1)))
      throw PreconditionError("form " + std::to_string(i + 1) + " is not of the shape c x + y");
    slopes.push_back(arr.forms[i].a());
  }
  return NormalizedArrangement::from_slopes(std::move(slopes), arr.beta);
}

Arrangement change_coordinates(const Arrangement& arr, const Matrix2& t) {
  if ((t[0][0] * t[1][1] - t[0][1] * t[1][0]).is_zero())
    throw PreconditionError("change of coordinates must be invertible");
  Arrangement out;
  out.beta = arr.beta;
  for (const LinearForm& f : arr.forms)
    out.forms.emplace_back(f.a() * t[0][0] + f.b() * t[1][0], f.a() * t[0][1] + f.b() * t[1][1]);
  return out;
}

Arrangement permute(const Arrangement& arr, const std::vector<std::size_t>& perm) {
  if (perm.size() != arr.size()) throw LengthMismatch(arr.size(), perm.size());
  Arrangement out;
  for (std::size_t i : perm) {
    if (i >= arr.size()) throw PreconditionError("permutation index out of range");
    out.forms.push_back(arr.forms[i]);
    out.beta.push_back(arr.beta[i]);
  }
  return out;
}

std::vector<std::vector<std::size_t>> nbc_subsets(std::size_t m) {
  if (m == 0) throw PreconditionError("nbc_subsets needs m >= 1");
  std::vector<std::vector<std::size_t>> out;
  out.emplace_back();
  for (std::size_t i = 0; i < m; ++i) out.push_back({i});
  for (std::size_t i = 1; i < m; ++i) out.push_back({0, i});
  return out;
}

}  // namespace dmod
