#include "dmod/poly.hpp"

#include <algorithm>

#include "dmod/errors.hpp"
#include "term_format.hpp"

namespace dmod {

Poly2::Poly2(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(Exponent2{0, 0}, c);
}

Poly2 Poly2::x() { return monomial(1, 0); }
Poly2 Poly2::y() { return monomial(0, 1); }

Poly2 Poly2::monomial(unsigned deg_x, unsigned deg_y, const Scalar& c) {
  Poly2 p;
  p.add_term({deg_x, deg_y}, c);
  return p;
}

Scalar Poly2::coefficient(unsigned deg_x, unsigned deg_y) const {
  auto it = terms_.find({deg_x, deg_y});
  return it == terms_.end() ? Scalar(0) : it->second;
}

int Poly2::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.x + e.y));
  return d;
}

int Poly2::degree_y() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.y));
  return d;
}

void Poly2::add_term(Exponent2 e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Poly2 Poly2::operator-() const {
  Poly2 r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Poly2& Poly2::operator+=(const Poly2& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Poly2& Poly2::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  Poly2 r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term({ea.x + eb.x, ea.y + eb.y}, ca * cb);
  return r;
}

Poly2 Poly2::pow(unsigned n) const {
  Poly2 result(Scalar(1));
  Poly2 base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Poly2 Poly2::partial_x() const {
  Poly2 r;
  for (const auto& [e, c] : terms_)
    if (e.x > 0) r.add_term({e.x - 1, e.y}, c * Scalar(static_cast<long>(e.x)));
  return r;
}

Poly2 Poly2::partial_y() const {
  Poly2 r;
  for (const auto& [e, c] : terms_)
    if (e.y > 0) r.add_term({e.x, e.y - 1}, c * Scalar(static_cast<long>(e.y)));
  return r;
}

std::string Poly2::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponent2, Scalar>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& l, const auto& r) {
    unsigned dl = l.first.x + l.first.y;
    unsigned dr = r.first.x + r.first.y;
    if (dl != dr) return dl > dr;
    return l.first.x > r.first.x;
  });
  std::string out;
  for (const auto& [e, c] : sorted) {
    std::string mono;
    detail::append_power(mono, "x", e.x);
    detail::append_power(mono, "y", e.y);
    detail::append_term(out, c, mono);
  }
  return out;
}

LinearForm::LinearForm(Scalar a, Scalar b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.is_zero() && b_.is_zero()) throw PreconditionError("zero linear form");
}

LinearForm LinearForm::normalized() const {
  if (!a_.is_zero()) return LinearForm(1, b_ / a_);
  return LinearForm(0, 1);
}

Poly2 LinearForm::to_poly() const {
  Poly2 p;
  p.add_term({1, 0}, a_);
  p.add_term({0, 1}, b_);
  return p;
}

std::string LinearForm::to_string() const { return to_poly().to_string(); }

bool proportional(const LinearForm& f, const LinearForm& g) {
  if (f.a().is_real() && f.b().is_real() && g.a().is_real() && g.b().is_real())
    return f.a().re() * g.b().re() == f.b().re() * g.a().re();
  return (f.a() * g.b() - f.b() * g.a()).is_zero();
}

std::optional<Poly2> divides_linear(const LinearForm& form, const Poly2& p) {
  if (p.is_zero()) return Poly2();
  if (form.b().is_zero()) {
    // form = a*x: every term must carry a power of x.
    Poly2 q;
    for (const auto& [e, c] : p.terms()) {
      if (e.x == 0) return std::nullopt;
      q.add_term({e.x - 1, e.y}, c);
    }
    return q * form.a().inverse();
  }
  // form = b*(y + s*x); synthetic division in y over C[x], top y-degree first.
  const Scalar slope = form.a() / form.b();
  Poly2 rest = p;
  Poly2 q;
  while (!rest.is_zero()) {
    auto top = std::max_element(rest.terms().begin(), rest.terms().end(),
                                [](const auto& l, const auto& r) { return l.first.y < r.first.y; });
    if (top->first.y == 0) return std::nullopt;
    const Exponent2 e{top->first.x, top->first.y - 1};
    const Scalar c = top->second;
    q.add_term(e, c);
    rest.add_term({e.x, e.y + 1}, -c);
    rest.add_term({e.x + 1, e.y}, -c * slope);
  }
  return q * form.b().inverse();
}

unsigned linear_multiplicity(const LinearForm& form, Poly2 p) {
  if (p.is_zero()) throw PreconditionError("multiplicity of the zero polynomial");
  unsigned k = 0;
  while (auto q = divides_linear(form, p)) {
    p = std::move(*q);
    ++k;
  }
  return k;
}

bool pairwise_independent(std::span<const LinearForm> forms) {
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (std::size_t j = i + 1; j < forms.size(); ++j)
      if (proportional(forms[i], forms[j])) return false;
  return true;
}

}  // namespace dmod
