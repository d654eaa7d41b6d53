#ifndef SEXTIC_QFORMS_HPP
#define SEXTIC_QFORMS_HPP

#include <map>
#include <vector>

#include "sextic/rational.hpp"

namespace sextic {

/// Coefficient vector with respect to the cyclic generators of a form.
using GroupElement = std::vector<long>;
using ModMatrix = std::vector<std::vector<long>>;

/// Quadratic form on the finite abelian group Z/n1 + ... + Z/nk.
/// b takes values in Q/Z, stored in [0, 1); q in Q/2Z, stored in [0, 2).
class FiniteQuadraticForm {
 public:
  FiniteQuadraticForm() = default;
  FiniteQuadraticForm(std::vector<long> orders, std::vector<std::vector<Rational>> gram, std::vector<Rational> q);

  [[nodiscard]] const std::vector<long>& orders() const { return orders_; }
  [[nodiscard]] std::size_t rank() const { return orders_.size(); }
  /// Order of the group.
  [[nodiscard]] long order() const;
  [[nodiscard]] const std::vector<std::vector<Rational>>& gram() const { return gram_; }
  [[nodiscard]] const std::vector<Rational>& q_values() const { return q_; }

  [[nodiscard]] GroupElement zero() const { return GroupElement(rank(), 0); }
  [[nodiscard]] GroupElement generator(std::size_t i) const;
  [[nodiscard]] GroupElement reduce(GroupElement x) const;
  [[nodiscard]] GroupElement add(const GroupElement& x, const GroupElement& y) const;
  [[nodiscard]] GroupElement scale(long k, const GroupElement& x) const;
  [[nodiscard]] long element_order(const GroupElement& x) const;
  /// Every element, in lexicographic order of reduced coefficients.
  [[nodiscard]] std::vector<GroupElement> elements() const;

  [[nodiscard]] Rational b(const GroupElement& x, const GroupElement& y) const;
  [[nodiscard]] Rational q(const GroupElement& x) const;

 private:
  std::vector<long> orders_;
  std::vector<std::vector<Rational>> gram_;
  std::vector<Rational> q_;
};

/// Subgroup of a form's group; `elements` is sorted and closed.
struct Subgroup {
  std::vector<GroupElement> generators;
  std::vector<GroupElement> elements;
  [[nodiscard]] std::size_t order() const { return elements.size(); }
  [[nodiscard]] bool contains(const GroupElement& x) const;
};

Subgroup span(const FiniteQuadraticForm& form, std::vector<GroupElement> generators);

/// Discriminant form of the negative definite root lattice A_n.
FiniteQuadraticForm discr_An(int n);
FiniteQuadraticForm direct_sum(const std::vector<FiniteQuadraticForm>& forms);

bool is_isotropic(const Subgroup& sub, const FiniteQuadraticForm& form);
Subgroup orthogonal_complement(const Subgroup& sub, const FiniteQuadraticForm& form);
/// K-perp / K with a cyclic decomposition found by search. Throws DomainError
/// if sub is not isotropic.
FiniteQuadraticForm orthogonal_complement_quotient(const Subgroup& sub, const FiniteQuadraticForm& form);

/// x -> M x, with column j the image of generator j.
GroupElement apply(const ModMatrix& m, const GroupElement& x, const FiniteQuadraticForm& form);
bool is_invariant(const Subgroup& sub, const ModMatrix& m, const FiniteQuadraticForm& form);
/// True iff M is bijective and preserves q.
bool is_isometry(const ModMatrix& m, const FiniteQuadraticForm& form);

/// Kernels of M - lambda for lambda = 1..p-1 where nontrivial. The group must
/// be (Z/p)^k, p prime. Throws DomainError if M is not invertible mod p.
std::map<long, Subgroup> eigenspace_decomposition(const ModMatrix& m, const FiniteQuadraticForm& form);

/// The cubic shift on (Z/7)^3: (a0, a1, a2) -> (a2, a0, a1).
ModMatrix cyclic_shift_matrix(std::size_t k = 3);

}  // namespace sextic

#endif  // SEXTIC_QFORMS_HPP
