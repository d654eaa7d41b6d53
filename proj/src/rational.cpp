#include "sextic/rational.hpp"

#include <cctype>

namespace sextic {

namespace {

mpz_class parse_integer(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  if (i == text.size()) throw std::invalid_argument("empty integer");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
      throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
    }
  }
  std::string s(text);
  if (s[0] == '+') s.erase(0, 1);
  return mpz_class(s, 10);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '+' || den_text[0] == '-')) {
    throw std::invalid_argument("signed denominator in '" + std::string(text) + "'");
  }
  const mpz_class den = parse_integer(den_text);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return {parse_integer(text.substr(0, slash)), den};
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& r, unsigned e) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), r.raw().get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), r.raw().get_den_mpz_t(), e);
  return {n, d};
}

Rational mod(const Rational& r, const Rational& m) {
  // r - m * floor(r / m)
  const mpq_class q = r.raw() / m.raw();
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r - m * Rational(fl);
}

}  // namespace sextic
