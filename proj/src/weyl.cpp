#include "dmod/weyl.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <ostream>

#include "dmod/arrangement.hpp"
#include "dmod/errors.hpp"
#include "dmod/linsolve.hpp"
#include "term_format.hpp"

namespace dmod {

std::strong_ordering compare_monomials(const WeylMonomial& a, const WeylMonomial& b) {
  if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
  const std::array<long, 4> diff{static_cast<long>(a.i) - b.i, static_cast<long>(a.j) - b.j,
                                 static_cast<long>(a.k) - b.k, static_cast<long>(a.l) - b.l};
  for (auto it = diff.rbegin(); it != diff.rend(); ++it) {
    if (*it < 0) return std::strong_ordering::greater;
    if (*it > 0) return std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

WeylOp::WeylOp(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(WeylMonomial{}, c);
}

WeylOp WeylOp::monomial(WeylMonomial m, const Scalar& c) {
  WeylOp op;
  op.add_term(m, c);
  return op;
}

WeylOp WeylOp::from_poly(const Poly2& p) {
  WeylOp op;
  for (const auto& [e, c] : p.terms()) op.add_term({e.y, e.x, 0, 0}, c);
  return op;
}

Scalar WeylOp::coefficient(const WeylMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void WeylOp::add_term(const WeylMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

int WeylOp::total_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.total_degree());
}

unsigned WeylOp::order() const {
  unsigned r = 0;
  for (const auto& [m, c] : terms_) r = std::max(r, m.order());
  return r;
}

WeylOp WeylOp::operator-() const {
  WeylOp r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

WeylOp& WeylOp::operator+=(const WeylOp& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

WeylOp& WeylOp::operator-=(const WeylOp& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

WeylOp& WeylOp::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

namespace {

// Coefficients C(n, s) * (p)_s of  D^n t^p = sum_s C(n,s) (p)_s t^{p-s} D^{n-s}.
std::vector<mpz_class> leibniz_coefficients(unsigned n, unsigned p) {
  const unsigned top = std::min(n, p);
  std::vector<mpz_class> out(top + 1);
  mpz_class binom = 1;
  mpz_class falling = 1;
  for (unsigned s = 0; s <= top; ++s) {
    out[s] = binom * falling;
    binom = binom * (n - s) / (s + 1);
    falling *= (p - s);
  }
  return out;
}

}  // namespace

WeylOp operator*(const WeylOp& a, const WeylOp& b) {
  WeylOp r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      const Scalar c = ca * cb;
      // Dx^{ka} passes x^{jb}; Dy^{la} passes y^{ib}.
      const auto xs = leibniz_coefficients(ma.k, mb.j);
      const auto ys = leibniz_coefficients(ma.l, mb.i);
      for (unsigned s = 0; s < xs.size(); ++s) {
        for (unsigned t = 0; t < ys.size(); ++t) {
          WeylMonomial m{ma.i + mb.i - t, ma.j + mb.j - s, ma.k + mb.k - s, ma.l + mb.l - t};
          r.add_term(m, c * Scalar(Rational(xs[s] * ys[t])));
        }
      }
    }
  }
  return r;
}

WeylOp WeylOp::pow(unsigned n) const {
  WeylOp result(Scalar(1));
  for (unsigned e = 0; e < n; ++e) result = result * *this;
  return result;
}

std::string WeylOp::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const WeylMonomial& m = it->first;
    std::string mono;
    detail::append_power(mono, "y", m.i);
    detail::append_power(mono, "x", m.j);
    detail::append_power(mono, "Dx", m.k);
    detail::append_power(mono, "Dy", m.l);
    detail::append_term(out, it->second, mono);
  }
  return out;
}

namespace {

class OpParser {
 public:
  explicit OpParser(std::string_view text) : text_(text) {}

  WeylOp parse() {
    WeylOp sum;
    skip_space();
    bool negate = false;
    if (peek() == '-' || peek() == '+') negate = take() == '-';
    sum += signed_term(negate);
    for (;;) {
      skip_space();
      if (at_end()) break;
      const char sign = take();
      if (sign != '+' && sign != '-') fail("expected '+' or '-'");
      sum += signed_term(sign == '-');
    }
    return sum;
  }

 private:
  WeylOp signed_term(bool negate) {
    WeylOp t = term();
    return negate ? -t : t;
  }

  WeylOp term() {
    WeylOp product = factor();
    for (;;) {
      skip_space();
      if (peek() != '*') return product;
      take();
      product = product * factor();
    }
  }

  WeylOp factor() {
    WeylOp base = atom();
    skip_space();
    if (peek() != '^') return base;
    take();
    skip_space();
    return base.pow(static_cast<unsigned>(digits().get_ui()));
  }

  WeylOp atom() {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    const char c = peek();
    if (c == 'x' || c == 'y') {
      take();
      return c == 'x' ? WeylOp::x() : WeylOp::y();
    }
    if (c == 'D') {
      take();
      const char v = take();
      if (v == 'x') return WeylOp::dx();
      if (v == 'y') return WeylOp::dy();
      fail("expected Dx or Dy");
    }
    if (c == '(') {
      take();
      const auto close = text_.find(')', pos_);
      if (close == std::string_view::npos) fail("unbalanced parenthesis");
      Scalar s = Scalar::parse(text_.substr(pos_, close - pos_));
      pos_ = close + 1;
      return WeylOp(s);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = digits();
      mpz_class den = 1;
      if (peek() == '/') {
        take();
        den = digits();
      }
      if (den == 0) throw DivisionByZero();
      return WeylOp(Scalar(Rational(num, den)));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  mpz_class digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char take() { return at_end() ? '\0' : text_[pos_++]; }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("operator \"" + std::string(text_) + "\" at offset " + std::to_string(pos_) +
                     ": " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

WeylOp WeylOp::parse(std::string_view text) { return OpParser(text).parse(); }

std::ostream& operator<<(std::ostream& os, const WeylOp& op) { return os << op.to_string(); }

InitialTerm initial_term(const WeylOp& op) {
  if (op.is_zero()) throw PreconditionError("initial term of the zero operator");
  const auto& top = *op.terms().rbegin();
  return {top.first, top.second};
}

WeylOp weight_component(const WeylOp& op, int weight) {
  WeylOp r;
  for (const auto& [m, c] : op.terms())
    if (m.weight() == weight) r.add_term(m, c);
  return r;
}

bool is_homogeneous(const WeylOp& op, int weight) {
  return std::all_of(op.terms().begin(), op.terms().end(),
                     [&](const auto& t) { return t.first.weight() == weight; });
}

WeylOp commutator(const WeylOp& a, const WeylOp& b) { return a * b - b * a; }

AnnPair build_annihilators(std::span<const Scalar> slopes, std::span<const Scalar> beta) {
  const std::size_t m = slopes.size() + 2;
  if (beta.size() != m) throw LengthMismatch(m, beta.size());
  for (std::size_t s = 0; s < slopes.size(); ++s) {
    if (slopes[s].is_zero()) throw PreconditionError("zero slope: form coincides with y");
    for (std::size_t t = s + 1; t < slopes.size(); ++t)
      if (slopes[s] == slopes[t]) throw PreconditionError("repeated slope");
  }

  // Forms 2..m: y, c_3 x + y, ..., c_m x + y.
  std::vector<Poly2> forms;
  forms.push_back(Poly2::y());
  for (const Scalar& c : slopes) forms.push_back(Poly2::x() * c + Poly2::y());

  Scalar total = 0;
  for (const Scalar& b : beta) total += b;

  AnnPair ann;
  ann.m = m;
  ann.beta.assign(beta.begin(), beta.end());
  ann.P = WeylOp::monomial({0, 1, 1, 0}) + WeylOp::monomial({1, 0, 0, 1}) - WeylOp(total);

  Poly2 product(Scalar(1));
  for (const Poly2& f : forms) product = product * f;
  Poly2 lower;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    Poly2 partial(Scalar(1));
    for (std::size_t j = 0; j < forms.size(); ++j)
      if (j != i) partial = partial * forms[j];
    lower += partial * beta[i + 1];
  }
  ann.Q = WeylOp::from_poly(product) * WeylOp::dy() - WeylOp::from_poly(lower);
  return ann;
}

AnnPair build_annihilators(const NormalizedArrangement& arr) {
  return build_annihilators(arr.slopes(), arr.beta());
}

NormalForm normal_form(const WeylOp& f, const AnnPair& gens) {
  const InitialTerm in_p = initial_term(gens.P);
  const InitialTerm in_q = initial_term(gens.Q);
  NormalForm out;
  WeylOp rest = f;
  while (!rest.is_zero()) {
    const auto [mono, coeff] = initial_term(rest);
    const InitialTerm* divisor = nullptr;
    const WeylOp* gen = nullptr;
    WeylOp* multiplier = nullptr;
    if (mono.divisible_by(in_p.monomial)) {
      divisor = &in_p;
      gen = &gens.P;
      multiplier = &out.s1;
    } else if (mono.divisible_by(in_q.monomial)) {
      divisor = &in_q;
      gen = &gens.Q;
      multiplier = &out.s2;
    }
    if (divisor == nullptr) {
      out.remainder.add_term(mono, coeff);
      rest.add_term(mono, -coeff);
      continue;
    }
    const WeylMonomial& d = divisor->monomial;
    const WeylOp step =
        WeylOp::monomial({mono.i - d.i, mono.j - d.j, mono.k - d.k, mono.l - d.l},
                         coeff / divisor->coefficient);
    *multiplier += step;
    rest -= step * *gen;
  }
  return out;
}

bool in_remainder_space(const WeylMonomial& mono, std::size_t m) {
  if (mono.j != 0 && mono.k != 0) return false;
  return mono.l == 0 || mono.i + 2 <= m;
}

std::vector<WeylOp> weight_zero_generators(std::size_t m, unsigned max_degree) {
  if (m < 2) throw PreconditionError("normal-form space needs m >= 2");
  const unsigned bound = static_cast<unsigned>(m - 2);
  const unsigned max_order = max_degree / 2;
  const WeylOp y_dx = WeylOp::monomial({1, 0, 1, 0});
  const WeylOp y_dy = WeylOp::monomial({1, 0, 0, 1});
  const WeylOp x_dy = WeylOp::monomial({0, 1, 0, 1});

  std::vector<WeylOp> gens;
  for (unsigned k = 1; k <= max_order; ++k) gens.push_back(y_dx.pow(k));
  for (unsigned k = 1; k <= max_order; ++k)
    for (unsigned l = 1; k + l <= bound && k + l <= max_order; ++l)
      gens.push_back(y_dx.pow(k) * y_dy.pow(l));
  for (unsigned l = 0; l <= bound && l <= max_order; ++l)
    for (unsigned k = 0; k + l <= max_order; ++k) gens.push_back(y_dy.pow(l) * x_dy.pow(k));
  return gens;
}

bool in_N0_span(const WeylOp& op, std::size_t m) {
  if (!is_homogeneous(op, 0)) throw PreconditionError("in_N0_span needs a weight-0 operator");
  if (op.is_zero()) return true;
  const auto gens = weight_zero_generators(m, static_cast<unsigned>(op.total_degree()));

  std::map<WeylMonomial, std::size_t, TermOrderLess> rows;
  auto row_of = [&](const WeylMonomial& mono) {
    return rows.try_emplace(mono, rows.size()).first->second;
  };
  for (const WeylOp& g : gens)
    for (const auto& [mono, c] : g.terms()) row_of(mono);
  for (const auto& [mono, c] : op.terms()) row_of(mono);

  ScalarMatrix matrix(rows.size(), std::vector<Scalar>(gens.size(), Scalar(0)));
  std::vector<Scalar> rhs(rows.size(), Scalar(0));
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (const auto& [mono, c] : gens[g].terms()) matrix[rows.at(mono)][g] = c;
  for (const auto& [mono, c] : op.terms()) rhs[rows.at(mono)] = c;
  return solve_exact(std::move(matrix), std::move(rhs)).has_value();
}

}  // namespace dmod
