#include "sextic/multipoly.hpp"
#include "sextic/upoly.hpp"

namespace sextic {

namespace {

template <class Range>
Rational primitive_factor(const Range& coeffs, const Rational& lead) {
  mpz_class l(1);
  mpz_class g(0);
  for (const Rational& c : coeffs) {
    if (c.is_zero()) continue;
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.raw().get_den_mpz_t());
  }
  for (const Rational& c : coeffs) {
    if (c.is_zero()) continue;
    const mpz_class n = c.numerator() * (l / c.denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  Rational f(l, g);
  if (lead.sign() < 0) f = -f;
  return f;
}

}  // namespace

std::pair<MultiPoly<Rational>, Rational> integer_primitive(const MultiPoly<Rational>& p) {
  if (p.is_zero()) return {p, Rational(1)};
  std::vector<Rational> coeffs;
  coeffs.reserve(p.size());
  for (const auto& [e, c] : p.terms()) coeffs.push_back(c);
  const Rational f = primitive_factor(coeffs, p.leading_coefficient());
  return {p * f, f};
}

UPoly<Rational> integer_primitive(const UPoly<Rational>& p) {
  if (p.is_zero()) return p;
  return p * primitive_factor(p.coeffs(), p.lead());
}

}  // namespace sextic
