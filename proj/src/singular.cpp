#include "sextic/singular.hpp"

#include <algorithm>

#include "sextic/resultant.hpp"
#include "sextic/roots.hpp"

namespace sextic {

namespace {

using EP = MultiPoly<E>;
using UE = UPoly<E>;

const VariableList kXY{"x", "y"};
const VariableList kRS{"r", "s"};

constexpr int kMaxShear = 64;

UE upoly_in(const EP& p, std::size_t var) { return to_upoly(with_variables(p, VariableList{p.variables()[var]}), 0); }

bool all_rational(const UE& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const E& c) { return c.is_rational(); });
}

UPoly<Rational> demote(const UE& p) {
  std::vector<Rational> c;
  for (const auto& x : p.coeffs()) c.push_back(x.re());
  return UPoly<Rational>(std::move(c));
}

// Q(w)-roots with both coordinates found as common rational zeros of the
// two Q-components of p(r + s*w).
std::vector<E> eisenstein_roots_by_components(const UE& p) {
  const EP r = EP::variable(kRS, "r");
  const EP s = EP::variable(kRS, "s");
  const EP x = r + s * E::omega();
  EP val(kRS);
  EP power = constant_like(x, E(1));
  for (const auto& c : p.coeffs()) {
    val += power * c;
    power = power * x;
  }
  MultiPoly<Rational> a(kRS);
  MultiPoly<Rational> b(kRS);
  for (const auto& [e, c] : val.terms()) {
    a.add_term(e, c.re());
    b.add_term(e, c.om());
  }
  std::vector<E> out;
  std::vector<Rational> r_candidates;
  if (b.is_zero()) {
    throw DomainError("roots_in_eisenstein: degenerate component split");
  }
  const MultiPoly<Rational> res = resultant(a, b, std::size_t{1});
  if (res.is_zero()) throw DomainError("roots_in_eisenstein: components share a factor");
  r_candidates = rational_roots(to_upoly(res, 0));
  for (const auto& r0 : r_candidates) {
    const UPoly<Rational> as = to_upoly(specialize(a, 0, r0), 1);
    const UPoly<Rational> bs = to_upoly(specialize(b, 0, r0), 1);
    const UPoly<Rational> g = gcd(as, bs);
    if (g.degree() <= 0) continue;
    for (const auto& s0 : rational_roots(g)) {
      const E alpha(r0, s0);
      if (is_zero(p(alpha))) out.push_back(alpha);
    }
  }
  return out;
}

// ---- arithmetic in E[y]/(m) and polynomials in x over it ----

// Inverse of a modulo m (monic), assuming gcd(a, m) = 1.
UE inverse_mod(const UE& a, const UE& m) {
  UE r0 = m;
  UE r1 = a % m;
  UE s0;
  UE s1 = UE::constant(E(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    UE s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.degree() != 0) throw DomainError("inverse_mod: not invertible");
  return (s0 * (E(1) / r0.lead())) % m;
}

using XPoly = std::vector<UE>;  // coefficient of x^k at index k

void reduce(XPoly& a, const UE& m) {
  for (auto& c : a) c = c % m;
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

XPoly xpoly_of(const EP& f) {
  XPoly out;
  for (const auto& c : coefficients_in(f, 0)) out.push_back(upoly_in(c, 1));
  return out;
}

XPoly x_derivative(const XPoly& a) {
  XPoly out;
  for (std::size_t k = 1; k < a.size(); ++k) out.push_back(a[k] * E(static_cast<long>(k)));
  return out;
}

// a mod b where lc(b) is invertible modulo m.
XPoly xmod(XPoly a, const XPoly& b, const UE& m) {
  const UE inv = inverse_mod(b.back(), m);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const UE c = (a.back() * inv) % m;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] = (a[shift + j] - c * b[j]) % m;
    a.pop_back();
    while (!a.empty() && a.back().is_zero()) a.pop_back();
  }
  return a;
}

struct Branch {
  UE modulus;
  XPoly g;  // leading coefficient invertible modulo `modulus` (or empty)
};

// gcd of a and b over E[y]/(m), splitting m whenever a leading coefficient is
// a zero divisor.
std::vector<Branch> gcd_split(const UE& m, const XPoly& a, const XPoly& b) {
  struct Task {
    UE m;
    XPoly a;
    XPoly b;
  };
  std::vector<Task> stack{{m, a, b}};
  std::vector<Branch> out;
  while (!stack.empty()) {
    Task task = std::move(stack.back());
    stack.pop_back();
    if (task.m.degree() <= 0) continue;
    reduce(task.a, task.m);
    reduce(task.b, task.m);
    if (task.b.empty()) std::swap(task.a, task.b);
    if (task.b.empty()) {
      out.push_back({task.m, {}});
      continue;
    }
    const UE h = gcd(task.b.back(), task.m);
    if (h.degree() > 0) {
      stack.push_back({h, task.a, task.b});
      stack.push_back({task.m / h, task.a, task.b});
      continue;
    }
    if (task.a.empty()) {
      out.push_back({task.m, task.b});
      continue;
    }
    XPoly r = xmod(task.a, task.b, task.m);
    stack.push_back({task.m, std::move(task.b), std::move(r)});
  }
  return out;
}

// Number of distinct singular points of the affine curve f(x, y), assuming
// the projection (x, y) -> y separates them; nullopt when it does not.
std::optional<std::vector<std::pair<UE, int>>> singular_fibres(const EP& f) {
  const EP fx = derivative(f, 0);
  const EP fy = derivative(f, 1);
  if (fx.is_zero() && fy.is_zero()) return std::vector<std::pair<UE, int>>{};
  UE m;
  for (const auto& [p, q] : {std::pair{&fx, &fy}, std::pair{&f, &fx}, std::pair{&f, &fy}}) {
    if (p->degree_in(0) <= 0 && q->degree_in(0) <= 0) continue;
    if (p->is_zero() || q->is_zero()) continue;
    const EP r = resultant(*p, *q, std::size_t{0});
    if (r.is_zero()) continue;
    m = m.is_zero() ? upoly_in(r, 1) : gcd(m, upoly_in(r, 1));
  }
  if (m.is_zero()) return std::nullopt;
  m = squarefree_part(m);
  std::vector<std::pair<UE, int>> fibres;
  for (const auto& b1 : gcd_split(m, xpoly_of(f), xpoly_of(fx))) {
    for (const auto& b2 : gcd_split(b1.modulus, b1.g, xpoly_of(fy))) {
      if (b2.g.size() <= 1) continue;  // no common root in x
      // distinct roots of g over each sub-branch: deg g - deg gcd(g, g')
      for (const auto& b3 : gcd_split(b2.modulus, b2.g, x_derivative(b2.g))) {
        const int distinct = static_cast<int>(b2.g.size()) - static_cast<int>(b3.g.size());
        if (distinct > 1) return std::nullopt;
        if (distinct == 1) fibres.emplace_back(b3.modulus, 1);
      }
    }
  }
  return fibres;
}

EP shear(const EP& f, long k) {
  // old y = y + k x
  const EP x = EP::variable(f.variables(), f.variables()[0]);
  const EP y = EP::variable(f.variables(), f.variables()[1]);
  return substitute(f, std::vector<EP>{x, y + x * E(k)});
}

EP translate(const EP& f, const std::array<E, 2>& p) {
  const EP x = EP::variable(f.variables(), f.variables()[0]);
  const EP y = EP::variable(f.variables(), f.variables()[1]);
  return substitute(f, std::vector<EP>{x + constant_like(x, p[0]), y + constant_like(y, p[1])});
}

int intersection_at_origin(const EP& f, const EP& h) {
  if (!is_zero(f.constant_term()) || !is_zero(h.constant_term())) return 0;
  for (long k = 0; k < kMaxShear; ++k) {
    const EP F = shear(f, k);
    const EP G = shear(h, k);
    const auto lc_ok = [](const EP& p) {
      const auto c = coefficients_in(p, 0);
      return !c.empty() && !is_zero(c.back().constant_term());
    };
    if (!lc_ok(F) && !lc_ok(G)) continue;
    const UE f0 = upoly_in(specialize(F, 1, E(0)), 0);
    const UE g0 = upoly_in(specialize(G, 1, E(0)), 0);
    if (f0.is_zero() && g0.is_zero()) continue;
    // The only common zero on the line y = 0 must be the origin.
    const UE common = gcd(f0, g0);
    bool only_origin = true;
    for (int i = 0; i < common.degree(); ++i) only_origin = only_origin && is_zero(common[i]);
    if (!only_origin) continue;
    if (F.degree_in(0) <= 0 && G.degree_in(0) <= 0) continue;
    const EP r = resultant(F, G, std::size_t{0});
    if (r.is_zero()) throw InfiniteMultiplicityError("intersection multiplicity: common component");
    int ord = -1;
    for (const auto& [e, c] : r.terms()) ord = ord < 0 ? e[1] : std::min(ord, e[1]);
    return ord;
  }
  throw DomainError("intersection multiplicity: no admissible shear found");
}

void require_plane(const EP& f) {
  if (f.num_vars() != 2) throw DomainError("expected a polynomial in two variables");
}

void require_ternary_form(const EP& f) {
  if (f.num_vars() != 3) throw DomainError("expected a form in three variables");
  if (f.is_zero()) throw DomainError("zero polynomial");
  if (!f.is_homogeneous()) throw DomainError("expected a homogeneous polynomial");
}

}  // namespace

// ---- ProjPoint ----

ProjPoint::ProjPoint(E z0, E z1, E z2) : z_{std::move(z0), std::move(z1), std::move(z2)} {
  const std::size_t c = chart();
  const E inv = E(1) / z_[c];
  for (auto& z : z_) z = z * inv;
}

std::size_t ProjPoint::chart() const {
  for (std::size_t i = 3; i-- > 0;) {
    if (!is_zero(z_[i])) return i;
  }
  throw DomainError("projective point with all coordinates zero");
}

bool ProjPoint::is_rational() const {
  return std::all_of(z_.begin(), z_.end(), [](const E& c) { return c.is_rational(); });
}

std::string ProjPoint::str() const { return "(" + z_[0].str() + ":" + z_[1].str() + ":" + z_[2].str() + ")"; }

std::string SingularityReport::type_name() const {
  switch (kind) {
    case SingularityKind::Smooth:
      return "smooth";
    case SingularityKind::A:
      return "A" + std::to_string(milnor);
    case SingularityKind::NonA:
      return "non-A";
  }
  return "?";
}

// ---- roots ----

std::vector<E> roots_in_eisenstein(const UE& p, int max_degree) {
  if (p.is_zero()) throw DomainError("roots_in_eisenstein: zero polynomial");
  UE q = squarefree_part(p);
  std::vector<E> out;
  if (all_rational(q)) {
    for (const auto& r : rational_roots(demote(q))) {
      out.emplace_back(r);
      q = q / UE::linear_root(E(r));
    }
  }
  if (q.degree() == 1) {
    out.push_back(-q[0] / q[1]);
  } else if (q.degree() >= 2 && q.degree() <= max_degree) {
    for (const auto& a : eisenstein_roots_by_components(q)) {
      if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
    }
  }
  return out;
}

// ---- squarefree ----

bool is_squarefree_curve(const EP& f) {
  require_ternary_form(f);
  const int d = f.total_degree();
  const VariableList s_only{"s"};
  const EP s = EP::variable(s_only, "s");
  const EP one = constant_like(s, E(1));
  // Lines P + sQ with P = (1, a, b), Q = (0, 1, c).
  for (int a = 0; a <= 3; ++a) {
    for (int b = -3; b <= 3; ++b) {
      for (int c = -3; c <= 3; ++c) {
        const EP restricted = substitute(f, std::vector<EP>{one, one * E(a) + s, one * E(b) + s * E(c)});
        const UE u = upoly_in(restricted, 0);
        if (u.degree() != d) continue;
        if (gcd(u, derivative(u)).degree() == 0) return true;
      }
    }
  }
  return false;
}

bool is_squarefree_curve(const MultiPoly<Rational>& f) { return is_squarefree_curve(promote(f)); }

// ---- singular points ----

SingularSearch find_singular_points(const EP& f) {
  require_ternary_form(f);
  if (!is_squarefree_curve(f)) throw MultipleComponentError("find_singular_points: curve has a multiple component");
  SingularSearch out;
  const std::array<EP, 3> grad{derivative(f, 0), derivative(f, 1), derivative(f, 2)};

  // Points on the line z2 = 0: (1:0:0) and (s:1:0).
  {
    const auto vanishes = [&](const std::vector<E>& pt) {
      return std::all_of(grad.begin(), grad.end(), [&](const EP& g) { return is_zero(evaluate(g, pt)); });
    };
    if (vanishes({E(1), E(0), E(0)})) out.points.emplace_back(E(1), E(0), E(0));
    UE common;
    for (const auto& g : grad) {
      const UE u = upoly_in(specialize(specialize(g, 2, E(0)), 1, E(1)), 0);
      common = gcd(common, u);
    }
    if (common.is_zero()) throw MultipleComponentError("find_singular_points: line z2 = 0 is singular");
    if (common.degree() > 0) {
      const UE sq = squarefree_part(common);
      const auto roots = roots_in_eisenstein(sq);
      for (const auto& r : roots) out.points.emplace_back(r, E(1), E(0));
      out.unresolved += sq.degree() - static_cast<int>(roots.size());
    }
  }

  // Affine chart z2 = 1.
  const EP affine = with_variables(specialize(f, 2, E(1)), {f.variables()[0], f.variables()[1]});
  const EP plane = rename(affine, kXY);
  for (long k = 0; k < kMaxShear; ++k) {
    const EP sheared = shear(plane, k);
    const auto fibres = singular_fibres(sheared);
    if (!fibres) continue;
    const EP sx = derivative(sheared, 0);
    const EP sy = derivative(sheared, 1);
    for (const auto& [m, count] : *fibres) {
      const auto ys = roots_in_eisenstein(m);
      out.unresolved += m.degree() - static_cast<int>(ys.size());
      for (const auto& y0 : ys) {
        UE g;
        for (const EP* p : {&sheared, &sx, &sy}) g = gcd(g, upoly_in(specialize(*p, 1, y0), 0));
        const UE sq = squarefree_part(g);
        if (sq.degree() != 1) throw DomainError("find_singular_points: fibre without a unique singular point");
        const E x0 = -sq[0] / sq[1];
        out.points.emplace_back(x0, y0 + x0 * E(k), E(1));
      }
    }
    for (const auto& p : out.points) {
      for (const auto& g : grad) {
        if (!is_zero(evaluate(g, std::vector<E>(p.coords().begin(), p.coords().end())))) {
          throw DomainError("find_singular_points: internal check failed at " + p.str());
        }
      }
    }
    return out;
  }
  throw DomainError("find_singular_points: no separating projection found");
}

SingularSearch find_singular_points(const MultiPoly<Rational>& f) { return find_singular_points(promote(f)); }

// ---- local invariants ----

int local_intersection_multiplicity(const EP& f, const EP& h, const std::array<E, 2>& p) {
  require_plane(f);
  f.require_same_ring(h);
  return intersection_at_origin(translate(f, p), translate(h, p));
}

int local_intersection_multiplicity(const MultiPoly<Rational>& f, const MultiPoly<Rational>& h,
                                    const std::array<Rational, 2>& p) {
  return local_intersection_multiplicity(promote(f), promote(h), {E(p[0]), E(p[1])});
}

SingularityReport classify_affine(const EP& f, const std::array<E, 2>& p) {
  require_plane(f);
  const EP g = translate(f, p);
  SingularityReport rep{ProjPoint(p[0], p[1], E(1))};
  if (!is_zero(g.constant_term())) throw NotOnCurveError("classify: point " + rep.point.str() + " is not on the curve");
  if (!is_zero(g.coefficient({1, 0})) || !is_zero(g.coefficient({0, 1}))) return rep;
  const E a = g.coefficient({2, 0});
  const E b = g.coefficient({1, 1});
  const E c = g.coefficient({0, 2});
  // Hessian [[2a, b], [b, 2c]]
  int rank = 0;
  if (!is_zero(E(4) * a * c - b * b)) {
    rank = 2;
  } else if (!is_zero(a) || !is_zero(b) || !is_zero(c)) {
    rank = 1;
  }
  rep.hessian_corank = 2 - rank;
  if (rank == 2) {
    rep.kind = SingularityKind::A;
    rep.milnor = 1;
    return rep;
  }
  rep.milnor = intersection_at_origin(derivative(g, 0), derivative(g, 1));
  rep.kind = rank == 1 ? SingularityKind::A : SingularityKind::NonA;
  return rep;
}

SingularityReport classify_affine(const MultiPoly<Rational>& f, const std::array<Rational, 2>& p) {
  return classify_affine(promote(f), {E(p[0]), E(p[1])});
}

SingularityReport classify_Ak(const EP& f, const ProjPoint& p) {
  require_ternary_form(f);
  const std::size_t c = p.chart();
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i != c) rest.push_back(i);
  }
  const EP affine = rename(with_variables(specialize(f, c, E(1)), {f.variables()[rest[0]], f.variables()[rest[1]]}), kXY);
  SingularityReport rep = classify_affine(affine, {p[rest[0]], p[rest[1]]});
  rep.point = p;
  return rep;
}

SingularityReport classify_Ak(const MultiPoly<Rational>& f, const ProjPoint& p) { return classify_Ak(promote(f), p); }

std::vector<SingularityReport> singularity_census(const EP& f, int* unresolved) {
  const SingularSearch found = find_singular_points(f);
  std::vector<SingularityReport> out;
  for (const auto& p : found.points) out.push_back(classify_Ak(f, p));
  if (unresolved != nullptr) *unresolved = found.unresolved;
  return out;
}

std::vector<SingularityReport> singularity_census(const MultiPoly<Rational>& f, int* unresolved) {
  return singularity_census(promote(f), unresolved);
}

int milnor_sum(const EP& f) {
  int unresolved = 0;
  int total = 0;
  for (const auto& r : singularity_census(f, &unresolved)) total += r.milnor;
  if (unresolved > 0) throw UnresolvedPointsError(total, unresolved);
  return total;
}

int milnor_sum(const MultiPoly<Rational>& f) { return milnor_sum(promote(f)); }

}  // namespace sextic
