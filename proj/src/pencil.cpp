#include "sextic/pencil.hpp"

#include <algorithm>

#include "sextic/resultant.hpp"

namespace sextic {

MultiPoly<Rational> pencil_discriminant(const MultiPoly<Rational>& f) {
  if (f.num_vars() != 2) throw DomainError("pencil_discriminant: expected a polynomial in two variables");
  if (f.degree_in(0) <= 0) throw DegenerateInput("pencil_discriminant: polynomial is constant in x");
  const MultiPoly<Rational> r = resultant(f, derivative(f, 0), std::size_t{0});
  if (r.is_zero()) return with_variables(r, {f.variables()[1]});
  return integer_primitive(with_variables(r, {f.variables()[1]})).first;
}

bool verify_factorization(const MultiPoly<Rational>& d,
                          const std::vector<std::pair<MultiPoly<Rational>, int>>& claimed) {
  MultiPoly<Rational> product = constant_like(d, Rational(1));
  for (const auto& [p, e] : claimed) {
    if (e < 0) return false;
    product = product * pow(with_variables(p, d.variables()), static_cast<unsigned>(e));
  }
  return proportional(d, product);
}

PencilCensus singular_fiber_census(const MultiPoly<Rational>& f, const Rational& width) {
  PencilCensus out;
  out.discriminant = pencil_discriminant(f);
  if (out.discriminant.is_zero()) throw DegenerateInput("singular_fiber_census: discriminant vanishes identically");
  const UPoly<Rational> d = to_upoly(out.discriminant);
  int real_total = 0;
  int sqfree_degree = 0;
  for (const auto& [factor, exponent] : squarefree_factorization(d)) {
    FactorCensus fc;
    fc.factor = integer_primitive(factor);
    fc.exponent = exponent;
    fc.real_roots = count_real_roots(fc.factor);
    fc.complex_pairs = (fc.factor.degree() - fc.real_roots) / 2;
    real_total += fc.real_roots;
    sqfree_degree += fc.factor.degree();
    out.complex_pair_count += fc.complex_pairs;
    for (const auto& iv : sturm_isolate(fc.factor)) out.real_values.push_back(refine(iv, width));
    out.factors.push_back(std::move(fc));
  }
  std::sort(out.real_values.begin(), out.real_values.end(),
            [](const IsolatingInterval& a, const IsolatingInterval& b) { return a.lo < b.lo; });
  if (static_cast<int>(out.real_values.size()) != real_total || sqfree_degree != real_total + 2 * out.complex_pair_count) {
    throw DomainError("singular_fiber_census: inconsistent root count");
  }
  return out;
}

}  // namespace sextic
