#include "sextic/eisenstein.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace sextic {

EisensteinRational& EisensteinRational::operator*=(const EisensteinRational& o) {
  // (a + b w)(c + d w) = (ac - bd) + (ad + bc - bd) w, using w^2 = -1 - w.
  const Rational bd = om_ * o.om_;
  Rational re = re_ * o.re_ - bd;
  Rational om = re_ * o.om_ + om_ * o.re_ - bd;
  re_ = std::move(re);
  om_ = std::move(om);
  return *this;
}

EisensteinRational& EisensteinRational::operator/=(const EisensteinRational& o) {
  const Rational n = o.norm();
  if (n.is_zero()) throw std::domain_error("division by zero");
  *this *= o.conj();
  re_ /= n;
  om_ /= n;
  return *this;
}

std::string EisensteinRational::str() const {
  if (om_.is_zero()) return re_.str();
  std::string w;
  if (om_ == Rational(1)) {
    w = "w";
  } else if (om_ == Rational(-1)) {
    w = "-w";
  } else {
    w = om_.str() + "*w";
  }
  if (re_.is_zero()) return w;
  return re_.str() + (w[0] == '-' ? "" : "+") + w;
}

EisensteinRational EisensteinRational::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("empty Eisenstein rational");
  if (s.back() != 'w') return {Rational::parse(s)};
  s.pop_back();
  // s now ends with the coefficient of w (possibly with a trailing '*').
  if (!s.empty() && s.back() == '*') s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-')) {
      split = i;
      break;
    }
  }
  std::string re_part = split == std::string::npos ? "" : s.substr(0, split);
  std::string om_part = split == std::string::npos ? s : s.substr(split);
  if (om_part.empty() || om_part == "+") om_part = "1";
  if (om_part == "-") om_part = "-1";
  return {re_part.empty() ? Rational(0) : Rational::parse(re_part), Rational::parse(om_part)};
}

EisensteinRational pow(const EisensteinRational& x, unsigned e) {
  EisensteinRational result(1);
  EisensteinRational base = x;
  while (e != 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

}  // namespace sextic
