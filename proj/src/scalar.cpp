#include "dmod/scalar.hpp"

#include <cctype>
#include <sstream>

#include "dmod/errors.hpp"

namespace dmod {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// "-"? digits ("/" digits)?
Rational parse_rational(std::string_view text, std::string_view whole) {
  auto fail = [&]() -> Rational {
    throw ParseError("malformed scalar \"" + std::string(whole) + "\"");
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) return fail();
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in \"" + std::string(whole) + "\"");
  Rational q(n, d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

}  // namespace

Scalar::Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::fraction(long num, long den) {
  if (den == 0) throw DivisionByZero();
  Rational q(num, den);
  q.canonicalize();
  return Scalar(q);
}

bool Scalar::is_integer() const {
  return sgn(im_) == 0 && re_.get_den() == 1;
}

mpz_class Scalar::to_integer() const {
  if (!is_integer()) throw PreconditionError(to_string() + " is not an integer");
  return re_.get_num();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Rational norm = re_ * re_ + im_ * im_;
  return Scalar(re_ / norm, -im_ / norm);
}

Scalar& Scalar::operator+=(const Scalar& other) {
  re_ += other.re_;
  im_ += other.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  re_ -= other.re_;
  im_ -= other.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  if (sgn(im_) == 0 && sgn(other.im_) == 0) {
    re_ *= other.re_;
    return *this;
  }
  Rational re = re_ * other.re_ - im_ * other.im_;
  Rational im = re_ * other.im_ + im_ * other.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  if (other.is_zero()) throw DivisionByZero();
  if (sgn(im_) == 0 && sgn(other.im_) == 0) {
    re_ /= other.re_;
    return *this;
  }
  return *this *= other.inverse();
}

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string Scalar::to_string() const {
  if (sgn(im_) == 0) return rational_to_string(re_);
  std::string imag = rational_to_string(im_) + "i";
  if (sgn(re_) == 0) return imag;
  return rational_to_string(re_) + (sgn(im_) > 0 ? "+" : "") + imag;
}

Scalar Scalar::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty scalar");
  if (text.back() != 'i') return Scalar(parse_rational(text, text));

  std::string_view head = text.substr(0, text.size() - 1);
  // The imaginary part starts at the last sign that is not leading.
  std::size_t split = std::string_view::npos;
  for (std::size_t p = head.size(); p-- > 1;) {
    if (head[p] == '+' || head[p] == '-') {
      split = p;
      break;
    }
  }
  if (split == std::string_view::npos) return Scalar(Rational(0), parse_rational(head, text));

  Rational re = parse_rational(head.substr(0, split), text);
  std::string_view imag = head.substr(split);
  if (imag.front() == '+') imag.remove_prefix(1);
  if (!imag.empty() && imag.front() == '+') throw ParseError("malformed scalar \"" + std::string(text) + "\"");
  return Scalar(re, parse_rational(imag, text));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

}  // namespace dmod
