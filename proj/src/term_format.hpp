#pragma once

#include <string>

#include "dmod/scalar.hpp"

namespace dmod::detail {

// Appends "c*mono" to out, pulling a negative real sign into the " - "
// separator. Non-real coefficients are parenthesized. An empty mono is the
// constant monomial.
inline void append_term(std::string& out, const Scalar& coeff, const std::string& mono) {
  const bool first = out.empty();
  Scalar c = coeff;
  if (c.is_real() && sgn(c.re()) < 0) {
    out += first ? "-" : " - ";
    c = -c;
  } else if (!first) {
    out += " + ";
  }
  if (mono.empty()) {
    out += c.is_real() ? c.to_string() : "(" + c.to_string() + ")";
    return;
  }
  if (!(c == Scalar(1))) {
    out += c.is_real() ? c.to_string() : "(" + c.to_string() + ")";
    out += "*";
  }
  out += mono;
}

inline void append_power(std::string& mono, const char* name, unsigned power) {
  if (power == 0) return;
  if (!mono.empty()) mono += "*";
  mono += name;
  if (power > 1) mono += "^" + std::to_string(power);
}

}  // namespace dmod::detail
