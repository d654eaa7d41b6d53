#ifndef SEXTIC_SINGULAR_HPP
#define SEXTIC_SINGULAR_HPP

#include <array>
#include <string>
#include <vector>

#include "sextic/eisenstein.hpp"
#include "sextic/multipoly.hpp"
#include "sextic/upoly.hpp"

namespace sextic {

using E = EisensteinRational;

class MultipleComponentError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotOnCurveError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Intersection number is infinite (common component) or the singularity is
/// not isolated.
class InfiniteMultiplicityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Thrown by milnor_sum when some singular points have coordinates outside
/// Q(w); lower_bound is the Milnor sum over the resolved points.
class UnresolvedPointsError : public DomainError {
 public:
  UnresolvedPointsError(int lower_bound, int unresolved)
      : DomainError("milnor_sum: " + std::to_string(unresolved) + " singular point(s) outside Q(w); partial sum " +
                    std::to_string(lower_bound)),
        lower_bound(lower_bound),
        unresolved(unresolved) {}
  int lower_bound;
  int unresolved;
};

/// Point of P^2 over Q(w), scaled so that its last nonzero coordinate is 1.
class ProjPoint {
 public:
  ProjPoint(E z0, E z1, E z2);
  [[nodiscard]] const std::array<E, 3>& coords() const { return z_; }
  [[nodiscard]] const E& operator[](std::size_t i) const { return z_[i]; }
  /// Index of the coordinate normalised to 1.
  [[nodiscard]] std::size_t chart() const;
  [[nodiscard]] bool is_rational() const;
  [[nodiscard]] std::string str() const;  // "(a:b:c)"
  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

 private:
  std::array<E, 3> z_;
};

enum class SingularityKind { Smooth, A, NonA };

struct SingularityReport {
  ProjPoint point;
  SingularityKind kind = SingularityKind::Smooth;
  int milnor = 0;
  int hessian_corank = 0;
  /// "smooth", "A6", "non-A"
  [[nodiscard]] std::string type_name() const;
};

/// Result of the singular-point search. `unresolved` counts distinct singular
/// points whose coordinates do not lie in Q(w).
struct SingularSearch {
  std::vector<ProjPoint> points;
  int unresolved = 0;
};

/// Roots of p lying in Q(w), without repetition. Polynomials of degree above
/// `max_degree` after removal of rational roots are not searched further.
std::vector<E> roots_in_eisenstein(const UPoly<E>& p, int max_degree = 12);

/// Squarefree test for a homogeneous ternary form via restriction to lines.
bool is_squarefree_curve(const MultiPoly<E>& f);
bool is_squarefree_curve(const MultiPoly<Rational>& f);

/// f(x, y, z) homogeneous in its three variables.
SingularSearch find_singular_points(const MultiPoly<E>& f);
SingularSearch find_singular_points(const MultiPoly<Rational>& f);

/// Local intersection number at an affine point of two polynomials in two
/// variables.
int local_intersection_multiplicity(const MultiPoly<E>& f, const MultiPoly<E>& h, const std::array<E, 2>& p);
int local_intersection_multiplicity(const MultiPoly<Rational>& f, const MultiPoly<Rational>& h,
                                    const std::array<Rational, 2>& p);

/// Classification of an affine plane curve f(x, y) at p.
SingularityReport classify_affine(const MultiPoly<E>& f, const std::array<E, 2>& p);
SingularityReport classify_affine(const MultiPoly<Rational>& f, const std::array<Rational, 2>& p);

/// Classification of a projective curve at p, in the chart of p's normalised
/// coordinate.
SingularityReport classify_Ak(const MultiPoly<E>& f, const ProjPoint& p);
SingularityReport classify_Ak(const MultiPoly<Rational>& f, const ProjPoint& p);

/// Reports for every singular point found; unresolved points are not listed.
std::vector<SingularityReport> singularity_census(const MultiPoly<E>& f, int* unresolved = nullptr);
std::vector<SingularityReport> singularity_census(const MultiPoly<Rational>& f, int* unresolved = nullptr);

int milnor_sum(const MultiPoly<E>& f);
int milnor_sum(const MultiPoly<Rational>& f);

/// f(x, y) -> f(x, y, z) of degree deg f.
template <ExactField S>
MultiPoly<S> homogenize(const MultiPoly<S>& f, const std::string& var) {
  VariableList vars = f.variables();
  vars.push_back(var);
  const int d = f.total_degree();
  MultiPoly<S> out(vars);
  for (const auto& [e, c] : f.terms()) {
    Exponents g = e;
    g.push_back(d - total_degree(e));
    out.add_term(std::move(g), c);
  }
  return out;
}

}  // namespace sextic

#endif  // SEXTIC_SINGULAR_HPP
