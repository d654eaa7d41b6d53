#ifndef SEXTIC_ROOTS_HPP
#define SEXTIC_ROOTS_HPP

#include <vector>

#include "sextic/multipoly.hpp"
#include "sextic/rational.hpp"
#include "sextic/upoly.hpp"

namespace sextic {

/// [lo, hi] containing exactly one real root of `poly` (a squarefree
/// polynomial). lo == hi marks an exact rational root.
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  UPoly<Rational> poly;

  [[nodiscard]] bool is_exact() const { return lo == hi; }
  [[nodiscard]] Rational width() const { return hi - lo; }
  [[nodiscard]] Rational midpoint() const { return (lo + hi) / Rational(2); }
  [[nodiscard]] bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

std::vector<UPoly<Rational>> sturm_sequence(const UPoly<Rational>& p);

/// Sign changes of the Sturm sequence at x (zeros skipped).
int sign_variations(const std::vector<UPoly<Rational>>& seq, const Rational& x);

/// Number of distinct real roots of p.
int count_real_roots(const UPoly<Rational>& p);

/// Isolates every distinct real root of p. Rational roots come back as exact
/// degenerate intervals; intervals are disjoint and sorted by lower endpoint.
/// Throws DomainError for the zero polynomial.
std::vector<IsolatingInterval> sturm_isolate(const UPoly<Rational>& p);
std::vector<IsolatingInterval> sturm_isolate(const MultiPoly<Rational>& p);

/// Bisects until the width is at most `width`.
IsolatingInterval refine(IsolatingInterval iv, const Rational& width);

/// Distinct rational roots, ascending.
std::vector<Rational> rational_roots(const UPoly<Rational>& p);

}  // namespace sextic

#endif  // SEXTIC_ROOTS_HPP
