#include "dmod/action.hpp"

#include <algorithm>
#include <map>

#include "dmod/errors.hpp"

namespace dmod {

TwistedModule::TwistedModule(Arrangement arr) : arr_(std::move(arr)) {
  validate(arr_);
  for (const LinearForm& f : arr_.forms) form_polys_.push_back(f.to_poly());
}

TwistedElement TwistedModule::zero() const {
  return {Poly2(), std::vector<long>(size(), 0)};
}

TwistedElement TwistedModule::generator_element() const {
  return {Poly2(Scalar(1)), std::vector<long>(size(), 0)};
}

TwistedElement TwistedModule::element(Poly2 p, std::vector<long> shifts) const {
  if (shifts.size() != size()) throw LengthMismatch(size(), shifts.size());
  return canonical(std::move(p), std::move(shifts));
}

TwistedElement TwistedModule::canonical(Poly2 p, std::vector<long> shifts) const {
  if (p.is_zero()) return zero();
  for (std::size_t i = 0; i < size(); ++i) {
    while (auto q = divides_linear(arr_.forms[i], p)) {
      p = std::move(*q);
      ++shifts[i];
    }
  }
  return {std::move(p), std::move(shifts)};
}

TwistedElement TwistedModule::add(const TwistedElement& a, const TwistedElement& b) const {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::vector<long> shifts(size());
  Poly2 pa = a.p;
  Poly2 pb = b.p;
  for (std::size_t i = 0; i < size(); ++i) {
    shifts[i] = std::min(a.shifts[i], b.shifts[i]);
    if (a.shifts[i] > shifts[i])
      pa = pa * form_polys_[i].pow(static_cast<unsigned>(a.shifts[i] - shifts[i]));
    if (b.shifts[i] > shifts[i])
      pb = pb * form_polys_[i].pow(static_cast<unsigned>(b.shifts[i] - shifts[i]));
  }
  return canonical(pa + pb, std::move(shifts));
}

TwistedElement TwistedModule::scale(const TwistedElement& e, const Scalar& c) const {
  if (c.is_zero() || e.is_zero()) return zero();
  return {e.p * c, e.shifts};
}

TwistedElement TwistedModule::multiply(const TwistedElement& e, const Poly2& f) const {
  if (e.is_zero()) return zero();
  return canonical(e.p * f, e.shifts);
}

// D(p alpha^(beta+N)) = (D p) alpha^(beta+N)
//                     + p sum_i (beta_i + N_i) D(alpha_i) alpha^(beta+N-e_i),
// collected over the common shift N - (1, ..., 1).
TwistedElement TwistedModule::derivative(bool along_x, const TwistedElement& e) const {
  if (e.is_zero()) return zero();
  Poly2 all(Scalar(1));
  for (const Poly2& f : form_polys_) all = all * f;

  Poly2 numerator = (along_x ? e.p.partial_x() : e.p.partial_y()) * all;
  for (std::size_t i = 0; i < size(); ++i) {
    const Scalar& slope = along_x ? arr_.forms[i].a() : arr_.forms[i].b();
    if (slope.is_zero()) continue;
    Poly2 others(Scalar(1));
    for (std::size_t j = 0; j < size(); ++j)
      if (j != i) others = others * form_polys_[j];
    numerator += e.p * others * ((arr_.beta[i] + Scalar(e.shifts[i])) * slope);
  }
  std::vector<long> shifts = e.shifts;
  for (long& s : shifts) --s;
  return canonical(std::move(numerator), std::move(shifts));
}

TwistedElement TwistedModule::apply(Generator g, const TwistedElement& e) const {
  switch (g) {
    case Generator::X:
      return multiply(e, Poly2::x());
    case Generator::Y:
      return multiply(e, Poly2::y());
    case Generator::Dx:
      return derivative(true, e);
    case Generator::Dy:
      return derivative(false, e);
  }
  return zero();
}

TwistedElement TwistedModule::apply(const WeylOp& op, const TwistedElement& e) const {
  // Dx^k Dy^l e, shared between monomials.
  std::map<std::pair<unsigned, unsigned>, TwistedElement> cache;
  cache.emplace(std::pair{0u, 0u}, e);
  auto derivs = [&](auto&& self, unsigned k, unsigned l) -> const TwistedElement& {
    auto it = cache.find({k, l});
    if (it != cache.end()) return it->second;
    TwistedElement next = k == 0 ? derivative(false, self(self, 0, l - 1))
                                 : derivative(true, self(self, k - 1, l));
    return cache.emplace(std::pair{k, l}, std::move(next)).first->second;
  };

  TwistedElement result = zero();
  for (const auto& [mono, coeff] : op.terms()) {
    const TwistedElement& inner = derivs(derivs, mono.k, mono.l);
    result = add(result, multiply(inner, Poly2::monomial(mono.j, mono.i, coeff)));
  }
  return result;
}

long TwistedModule::valuation(const LinearForm& form, const TwistedElement& e) const {
  if (e.is_zero()) throw PreconditionError("valuation of the zero element");
  long base = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    if (proportional(form, arr_.forms[i])) {
      base = e.shifts[i];
      break;
    }
  }
  return base + static_cast<long>(linear_multiplicity(form, e.p));
}

std::string TwistedModule::to_string(const TwistedElement& e) const {
  if (e.is_zero()) return "0";
  std::string num;
  std::string den;
  for (std::size_t i = 0; i < size(); ++i) {
    const long s = e.shifts[i];
    if (s == 0) continue;
    std::string& target = s > 0 ? num : den;
    if (!target.empty()) target += "*";
    target += "a" + std::to_string(i + 1);
    if (std::labs(s) != 1) target += "^" + std::to_string(std::labs(s));
  }
  std::string out = "(" + e.p.to_string() + ")";
  if (!num.empty()) out += " * " + num;
  if (!den.empty()) out += " / (" + den + ")";
  return out + " * alpha^beta";
}

AnnihilatorCheck verify_annihilators(const AnnPair& ann, const NormalizedArrangement& arr) {
  TwistedModule module(arr.as_arrangement());
  const TwistedElement gen = module.generator_element();
  AnnihilatorCheck out;
  out.p_residual = module.apply(ann.P, gen);
  out.q_residual = module.apply(ann.Q, gen);
  out.ok = out.p_residual.is_zero() && out.q_residual.is_zero();
  return out;
}

TwistedModule a1_module(const Scalar& beta1) {
  return TwistedModule(Arrangement{{LinearForm(1, 0)}, {beta1}});
}

TwistedElement euler_reduction_a1(const std::vector<A1Term>& f, const Scalar& beta1) {
  TwistedModule module = a1_module(beta1);
  Poly2 p;
  for (const A1Term& t : f) {
    if (t.shift < 0) throw PreconditionError("euler_reduction_a1 expects shifts >= 0");
    p.add_term({static_cast<unsigned>(t.shift), 0}, t.coefficient);
  }
  if (p.is_zero()) throw PreconditionError("euler_reduction_a1 of the zero element");
  const long top = static_cast<long>(p.terms().rbegin()->first.x);

  TwistedElement e = module.element(std::move(p), {0});
  const WeylOp euler = WeylOp::monomial({0, 1, 1, 0});
  for (long i = 0; i < top; ++i) e = module.apply(euler - WeylOp(beta1 + Scalar(i)), e);
  return e;
}

}  // namespace dmod
