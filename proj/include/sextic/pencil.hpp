#ifndef SEXTIC_PENCIL_HPP
#define SEXTIC_PENCIL_HPP

#include <utility>
#include <vector>

#include "sextic/multipoly.hpp"
#include "sextic/roots.hpp"
#include "sextic/upoly.hpp"

namespace sextic {

struct FactorCensus {
  UPoly<Rational> factor;  // primitive integer polynomial
  int exponent = 0;
  int real_roots = 0;
  int complex_pairs = 0;
};

/// Singular members y = eta of the horizontal pencil of an affine curve.
struct PencilCensus {
  MultiPoly<Rational> discriminant;  // ring {y}
  std::vector<FactorCensus> factors;  // squarefree factorisation, by exponent
  std::vector<IsolatingInterval> real_values;  // sorted, disjoint
  int complex_pair_count = 0;
};

/// Res_x(f, df/dx) made primitive over Z, in the ring {y}. f is a polynomial
/// in (x, y), x first. Throws DegenerateInput if f is constant in x.
MultiPoly<Rational> pencil_discriminant(const MultiPoly<Rational>& f);

/// True iff prod claimed[i].first ^ claimed[i].second equals d up to a
/// nonzero rational scalar.
bool verify_factorization(const MultiPoly<Rational>& d, const std::vector<std::pair<MultiPoly<Rational>, int>>& claimed);

/// Real singular values isolated to width <= `width` (exact rational values
/// are returned as points).
PencilCensus singular_fiber_census(const MultiPoly<Rational>& f, const Rational& width = Rational(1, 128));

}  // namespace sextic

#endif  // SEXTIC_PENCIL_HPP
