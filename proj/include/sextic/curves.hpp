#ifndef SEXTIC_CURVES_HPP
#define SEXTIC_CURVES_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "sextic/multipoly.hpp"
#include "sextic/poly_text.hpp"
#include "sextic/reference_data.hpp"
#include "sextic/resultant.hpp"

namespace sextic {

using QPoly = MultiPoly<Rational>;
using EPoly = MultiPoly<EisensteinRational>;

/// z0, z1, z2
const VariableList& family_variables();

/// Coefficient table of the family: one entry per cyclic orbit of monomials,
/// coefficient given as a polynomial in t. The published table is the
/// default; the CLI can load an alternative one.
struct FamilyTable {
  struct Orbit {
    Exponents representative;
    QPoly coefficient;  // ring {t}
  };
  std::vector<Orbit> orbits;

  static FamilyTable published();
  static FamilyTable from_text(const std::vector<std::pair<Exponents, std::string>>& entries);
};

/// The exponent vectors e, shift(e), shift^2(e) without repetition, where
/// shift(e0,e1,e2) = (e2,e0,e1) is the substitution z0->z1->z2->z0.
std::vector<Exponents> cyclic_orbit(const Exponents& e);

/// C(t) with t symbolic: ring {z0, z1, z2, t}.
QPoly family_symbolic(const FamilyTable& table = FamilyTable::published());

/// C(t) for a numeric t: ring {z0, z1, z2}.
template <ExactField S>
MultiPoly<S> build_family_equation(const S& t, const FamilyTable& table = FamilyTable::published()) {
  const QPoly sym = family_symbolic(table);
  MultiPoly<S> lifted;
  if constexpr (std::is_same_v<S, Rational>) {
    lifted = sym;
  } else {
    lifted = promote(sym);
  }
  return with_variables(specialize(lifted, "t", t), family_variables());
}

/// True iff p (a polynomial in z0,z1,z2 and possibly parameters) is fixed by
/// z0 -> z1 -> z2 -> z0.
template <ExactField S>
bool is_cyclically_symmetric(const MultiPoly<S>& p, const VariableList& main = family_variables()) {
  std::vector<std::size_t> perm(p.num_vars());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  for (std::size_t k = 0; k < main.size(); ++k) {
    perm[p.require_index(main[k])] = p.require_index(main[(k + 1) % main.size()]);
  }
  return is_invariant_under_permutation(p, perm);
}

/// u0, u1, u2
const VariableList& ansatz_variables();

template <ExactField S>
struct AnsatzCoefficients {
  S a, b, c, d;
};

/// Orbit representatives of the four ansatz coefficients a, b, c, d.
const std::array<Exponents, 4>& ansatz_orbits();

/// The ansatz with polynomial coefficients; coeffs share a ring that contains
/// u0, u1, u2 (and any parameters).
template <ExactField S>
MultiPoly<S> build_ansatz(const std::array<MultiPoly<S>, 4>& coeffs) {
  const MultiPoly<S>& like = coeffs[0];
  std::vector<std::size_t> idx;
  for (const auto& v : ansatz_variables()) idx.push_back(like.require_index(v));
  MultiPoly<S> out = zero_like(like);
  for (std::size_t k = 0; k < 4; ++k) {
    MultiPoly<S> orbit = zero_like(like);
    for (const auto& e : cyclic_orbit(ansatz_orbits()[k])) {
      Exponents f(like.num_vars(), 0);
      for (std::size_t i = 0; i < 3; ++i) f[idx[i]] = e[i];
      orbit.add_term(std::move(f), S(1));
    }
    out += coeffs[k] * orbit;
  }
  return out;
}

template <ExactField S>
MultiPoly<S> build_ansatz(const AnsatzCoefficients<S>& c) {
  const VariableList& v = ansatz_variables();
  return build_ansatz<S>({MultiPoly<S>::constant(v, c.a), MultiPoly<S>::constant(v, c.b),
                          MultiPoly<S>::constant(v, c.c), MultiPoly<S>::constant(v, c.d)});
}

/// Ansatz over Q[t] in the ring {u0, u1, u2, t}.
QPoly build_ansatz_symbolic(const std::array<QPoly, 4>& coeffs_in_t);

/// Linear forms in (a, b, c, d) over Q[t], one per partial derivative of the
/// ansatz, evaluated at (1 : t : t^2). Entries live in the ring {t}.
using LinearSystem = std::vector<std::array<QPoly, 4>>;
LinearSystem singular_condition_system();

/// Rank over Q(t).
std::size_t system_rank(const LinearSystem& rows);

/// Spanning vector of the solution space of the system together with
/// b = sign * 2a, made primitive over Q[t]. Throws DomainError if that space
/// is not one-dimensional.
std::array<QPoly, 4> solution_ray(const LinearSystem& rows, int sign);

/// True iff v and w span the same line over Q(t).
bool same_ray(const std::array<QPoly, 4>& v, const std::array<QPoly, 4>& w);

/// Parses four coefficient strings in t.
std::array<QPoly, 4> parse_ray(const std::array<std::string_view, 4>& text);

/// build_ansatz(ray) == cubic^2, all in the ring {u0, u1, u2, t}.
bool verify_square_factorization(const std::array<QPoly, 4>& ray, const QPoly& cubic);

/// A substitution of the source variables by polynomials in the target ring.
/// Variables of the input that are not sources pass through by name.
template <ExactField S>
struct CoordinateChange {
  enum class Kind { Linear, Monomial };
  std::string name;
  VariableList source;
  VariableList target;
  std::vector<MultiPoly<S>> images;
  Kind kind = Kind::Linear;
};

/// Linear change from a 3x3 matrix with entries in the target ring:
/// source[i] = sum_j m[i][j] * target_main[j]. Requires det(m) != 0.
template <ExactField S>
CoordinateChange<S> make_linear_change(std::string name, VariableList source, VariableList target_main,
                                       VariableList target, const std::vector<std::vector<MultiPoly<S>>>& m) {
  const std::size_t n = source.size();
  if (target_main.size() != n || m.size() != n) throw DomainError("linear change: dimension mismatch");
  CoordinateChange<S> ch{std::move(name), std::move(source), std::move(target), {}, CoordinateChange<S>::Kind::Linear};
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw DomainError("linear change: matrix is not square");
    MultiPoly<S> img(ch.target);
    for (std::size_t j = 0; j < n; ++j) {
      img += with_variables(m[i][j], ch.target) * MultiPoly<S>::variable(ch.target, target_main[j]);
    }
    ch.images.push_back(std::move(img));
  }
  PolyMatrix<S> det_input;
  for (const auto& row : m) {
    det_input.emplace_back();
    for (const auto& e : row) det_input.back().push_back(with_variables(e, ch.target));
  }
  if (bareiss_determinant(std::move(det_input)).is_zero()) {
    throw DomainError("linear change '" + ch.name + "' is singular");
  }
  return ch;
}

template <ExactField S>
MultiPoly<S> apply_change(const MultiPoly<S>& p, const CoordinateChange<S>& ch) {
  for (const auto& v : ch.source) static_cast<void>(p.require_index(v));
  std::map<std::string, MultiPoly<S>> map;
  for (std::size_t i = 0; i < ch.source.size(); ++i) map.emplace(ch.source[i], ch.images[i]);
  return substitute(p, map, ch.target);
}

/// Inverse of a linear change with constant coefficients.
template <ExactField S>
CoordinateChange<S> inverse(const CoordinateChange<S>& ch) {
  if (ch.kind != CoordinateChange<S>::Kind::Linear) throw DomainError("inverse: change is not linear");
  const std::size_t n = ch.source.size();
  if (ch.target.size() != n) throw DomainError("inverse: change has parameters");
  // Augmented matrix [M | I] with source_i = sum_j M[i][j] target_j.
  std::vector<std::vector<S>> a(n, std::vector<S>(2 * n, S(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [e, c] : ch.images[i].terms()) {
      if (total_degree(e) != 1) throw DomainError("inverse: change is not linear with constant coefficients");
      const auto j = static_cast<std::size_t>(std::find(e.begin(), e.end(), 1) - e.begin());
      a[i][j] = c;
    }
    a[i][n + i] = S(1);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && is_zero(a[piv][col])) ++piv;
    if (piv == n) throw DomainError("inverse: change is singular");
    std::swap(a[piv], a[col]);
    const S inv = S(1) / a[col][col];
    for (auto& x : a[col]) x = x * inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(a[r][col])) continue;
      const S f = a[r][col];
      for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] = a[r][k] - f * a[col][k];
    }
  }
  // target_j = sum_i Minv[j][i] source_i
  CoordinateChange<S> out{ch.name + "^-1", ch.target, ch.source, {}, CoordinateChange<S>::Kind::Linear};
  for (std::size_t j = 0; j < n; ++j) {
    MultiPoly<S> img(out.target);
    for (std::size_t i = 0; i < n; ++i) img += MultiPoly<S>::variable(out.target, ch.source[i]) * a[j][n + i];
    out.images.push_back(std::move(img));
  }
  return out;
}

/// Identity change on a list of variables.
template <ExactField S>
CoordinateChange<S> identity_change(const VariableList& vars) {
  CoordinateChange<S> ch{"identity", vars, vars, {}, CoordinateChange<S>::Kind::Linear};
  for (const auto& v : vars) ch.images.push_back(MultiPoly<S>::variable(vars, v));
  return ch;
}

/// Named changes: "paper-epi" (z -> X,Y,Z), "uv-vandermonde" (u -> v, over
/// Q[t]), "triangular" (v -> monomials in z, over Q[t]).
CoordinateChange<Rational> named_change(std::string_view name);
std::vector<std::string> named_change_ids();

/// Sets `var` to 1 and drops it; remaining variables are renamed by `names`
/// if given (positionally).
template <ExactField S>
MultiPoly<S> affine_chart(const MultiPoly<S>& p, std::string_view var, const VariableList& names = {}) {
  VariableList rest;
  for (const auto& v : p.variables()) {
    if (v != var) rest.push_back(v);
  }
  MultiPoly<S> out = with_variables(specialize(p, var, S(1)), rest);
  if (!names.empty()) out = rename(out, names);
  return out;
}

/// Result of the ansatz route: ansatz on the b = -2a ray, u -> v, then the
/// triangular map, with the common monomial factor in z removed.
struct AnsatzReconstruction {
  QPoly raw;                // ring {z0, z1, z2, t}
  Exponents stripped;       // monomial in z0, z1, z2 divided out
  QPoly reduced;            // raw / z^stripped
  std::optional<std::pair<QPoly, QPoly>> ratio;  // reduced * r.second == family * r.first
};
AnsatzReconstruction reconstruct_via_ansatz(const FamilyTable& table = FamilyTable::published());

/// The reducible-conics branch: ansatz (1, -2, 0, 0) with u0 = z0, u1 = z2,
/// u2 = z1; ring {z0, z1, z2}.
QPoly reducible_branch();

/// C(w t) pulled back along (z0, z1, z2) -> (z0, w^2 z1, w z2) is proportional
/// to C(t).
bool check_epsilon_twist(const EisensteinRational& t, const FamilyTable& table = FamilyTable::published());

}  // namespace sextic

#endif  // SEXTIC_CURVES_HPP
