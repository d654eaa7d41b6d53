#include "sextic/curves.hpp"

#include <set>

#include "sextic/upoly.hpp"

namespace sextic {

namespace {

const VariableList kT{"t"};
const VariableList kUT{"u0", "u1", "u2", "t"};
const VariableList kVT{"v0", "v1", "v2", "t"};
const VariableList kZT{"z0", "z1", "z2", "t"};

QPoly in_t(std::string_view text) { return parse_poly<Rational>(text, kT); }

QPoly t_poly(const QPoly& p) { return with_variables(p, kT); }

// gcd over Q[t] of polynomials in the ring {t}; zero entries are skipped.
UPoly<Rational> content_in_t(const std::array<QPoly, 4>& v) {
  UPoly<Rational> g;
  for (const auto& e : v) {
    if (!e.is_zero()) g = gcd(g, to_upoly(e));
  }
  return g;
}

}  // namespace

const VariableList& family_variables() {
  static const VariableList vars{"z0", "z1", "z2"};
  return vars;
}

const VariableList& ansatz_variables() {
  static const VariableList vars{"u0", "u1", "u2"};
  return vars;
}

const std::array<Exponents, 4>& ansatz_orbits() {
  static const std::array<Exponents, 4> orbits{Exponents{4, 0, 2}, Exponents{3, 2, 1}, Exponents{3, 1, 2},
                                               Exponents{2, 2, 2}};
  return orbits;
}

FamilyTable FamilyTable::published() {
  FamilyTable table;
  for (const auto& o : reference::family_orbits) {
    table.orbits.push_back({Exponents(o.exponents.begin(), o.exponents.end()), in_t(o.coefficient)});
  }
  return table;
}

FamilyTable FamilyTable::from_text(const std::vector<std::pair<Exponents, std::string>>& entries) {
  FamilyTable table;
  for (const auto& [e, text] : entries) {
    if (e.size() != 3) throw DomainError("family table: exponent vectors must have length 3");
    table.orbits.push_back({e, in_t(text)});
  }
  return table;
}

std::vector<Exponents> cyclic_orbit(const Exponents& e) {
  std::vector<Exponents> out{e};
  Exponents cur = e;
  for (;;) {
    cur = Exponents{cur[2], cur[0], cur[1]};
    if (cur == e) return out;
    out.push_back(cur);
  }
}

QPoly family_symbolic(const FamilyTable& table) {
  QPoly out(kZT);
  for (const auto& orbit : table.orbits) {
    QPoly sum(kZT);
    for (const auto& e : cyclic_orbit(orbit.representative)) {
      sum.add_term(Exponents{e[0], e[1], e[2], 0}, Rational(1));
    }
    out += with_variables(orbit.coefficient, kZT) * sum;
  }
  return out;
}

QPoly build_ansatz_symbolic(const std::array<QPoly, 4>& coeffs_in_t) {
  std::array<QPoly, 4> lifted;
  for (std::size_t k = 0; k < 4; ++k) lifted[k] = with_variables(coeffs_in_t[k], kUT);
  return build_ansatz<Rational>(lifted);
}

LinearSystem singular_condition_system() {
  const VariableList vars{"u0", "u1", "u2", "t", "a", "b", "c", "d"};
  const std::array<QPoly, 4> coeffs{QPoly::variable(vars, "a"), QPoly::variable(vars, "b"),
                                    QPoly::variable(vars, "c"), QPoly::variable(vars, "d")};
  const QPoly f = build_ansatz<Rational>(coeffs);
  const QPoly one = QPoly::constant(vars, Rational(1));
  const QPoly t = QPoly::variable(vars, "t");
  const std::vector<QPoly> point{one, t, t * t, t, coeffs[0], coeffs[1], coeffs[2], coeffs[3]};
  LinearSystem rows;
  for (std::size_t i = 0; i < 3; ++i) {
    const QPoly eq = substitute(derivative(f, i), point);
    std::array<QPoly, 4> row;
    for (std::size_t k = 0; k < 4; ++k) {
      // eq is linear in a,b,c,d: its coefficient of a is d(eq)/da.
      row[k] = t_poly(derivative(eq, 4 + k));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::size_t system_rank(const LinearSystem& rows) {
  PolyMatrix<Rational> m;
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  return bareiss_rank(std::move(m));
}

std::array<QPoly, 4> solution_ray(const LinearSystem& rows, int sign) {
  LinearSystem all = rows;
  all.push_back({QPoly::constant(kT, Rational(-2 * sign)), QPoly::constant(kT, Rational(1)), QPoly(kT), QPoly(kT)});
  if (system_rank(all) != 3) throw DomainError("solution_ray: solution space is not one-dimensional");
  // Pick three independent rows; the kernel is given by signed 3x3 minors.
  for (std::size_t skip = 0; skip < all.size(); ++skip) {
    LinearSystem three;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (i != skip) three.push_back(all[i]);
    }
    if (system_rank(three) != 3) continue;
    std::array<QPoly, 4> ray;
    for (std::size_t j = 0; j < 4; ++j) {
      PolyMatrix<Rational> minor;
      for (const auto& r : three) {
        minor.emplace_back();
        for (std::size_t k = 0; k < 4; ++k) {
          if (k != j) minor.back().push_back(r[k]);
        }
      }
      ray[j] = bareiss_determinant(std::move(minor));
      if (j % 2 == 1) ray[j] = -ray[j];
    }
    const QPoly g = to_multipoly(content_in_t(ray), kT, 0);
    for (auto& e : ray) e = divide_exact(e, g);
    // Integer content across all entries.
    mpz_class num = 0;
    mpz_class den = 1;
    for (const auto& e : ray) {
      for (const auto& [k, c] : e.terms()) {
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.numerator().get_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.denominator().get_mpz_t());
      }
    }
    for (auto& e : ray) e *= Rational(den, num);
    // Positive leading coefficient on the first nonzero entry.
    for (const auto& e : ray) {
      if (e.is_zero()) continue;
      if (e.leading_coefficient().sign() < 0) {
        for (auto& f : ray) f = -f;
      }
      break;
    }
    return ray;
  }
  throw DomainError("solution_ray: no independent triple of rows");
}

bool same_ray(const std::array<QPoly, 4>& v, const std::array<QPoly, 4>& w) {
  const auto nonzero = [](const std::array<QPoly, 4>& x) {
    return std::any_of(x.begin(), x.end(), [](const QPoly& e) { return !e.is_zero(); });
  };
  if (!nonzero(v) || !nonzero(w)) return false;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (t_poly(v[i]) * t_poly(w[j]) != t_poly(v[j]) * t_poly(w[i])) return false;
    }
  }
  return true;
}

std::array<QPoly, 4> parse_ray(const std::array<std::string_view, 4>& text) {
  return {in_t(text[0]), in_t(text[1]), in_t(text[2]), in_t(text[3])};
}

bool verify_square_factorization(const std::array<QPoly, 4>& ray, const QPoly& cubic) {
  const QPoly c = with_variables(cubic, kUT);
  return build_ansatz_symbolic(ray) == c * c;
}

CoordinateChange<Rational> named_change(std::string_view name) {
  using Ch = CoordinateChange<Rational>;
  if (name == "paper-epi") {
    const VariableList xyz{"X", "Y", "Z"};
    const auto c = [&](int p, int q) { return QPoly::constant(xyz, Rational(p, q)); };
    // z0 = X/3 - Y/3 + Z/3, z1 = -X/3 - 5Y/3 + 2Z/3, z2 = Y
    return make_linear_change<Rational>("paper-epi", family_variables(), xyz, xyz,
                                        {{c(1, 3), c(-1, 3), c(1, 3)}, {c(-1, 3), c(-5, 3), c(2, 3)},
                                         {c(0, 1), c(1, 1), c(0, 1)}});
  }
  if (name == "uv-vandermonde") {
    const QPoly one = QPoly::constant(kVT, Rational(1));
    const QPoly t = QPoly::variable(kVT, "t");
    const QPoly t2 = t * t;
    return make_linear_change<Rational>("uv-vandermonde", ansatz_variables(), {"v0", "v1", "v2"}, kVT,
                                        {{one, t2, t}, {t, one, t2}, {t2, t, one}});
  }
  if (name == "triangular") {
    const auto z = [](const char* v) { return QPoly::variable(kZT, v); };
    return Ch{"triangular", {"v0", "v1", "v2"}, kZT, {z("z1") * z("z2"), z("z2") * z("z0"), z("z0") * z("z1")},
              Ch::Kind::Monomial};
  }
  throw DomainError("unknown coordinate change '" + std::string(name) + "'");
}

std::vector<std::string> named_change_ids() { return {"paper-epi", "uv-vandermonde", "triangular"}; }

AnsatzReconstruction reconstruct_via_ansatz(const FamilyTable& table) {
  const auto ray = solution_ray(singular_condition_system(), -1);
  QPoly p = build_ansatz_symbolic(ray);
  p = apply_change(p, named_change("uv-vandermonde"));
  p = apply_change(p, named_change("triangular"));
  p = with_variables(p, kZT);

  AnsatzReconstruction out;
  out.raw = p;
  out.stripped = Exponents(3, 0);
  if (!p.is_zero()) {
    out.stripped = Exponents(p.terms().begin()->first.begin(), p.terms().begin()->first.begin() + 3);
    for (const auto& [e, c] : p.terms()) {
      for (std::size_t i = 0; i < 3; ++i) out.stripped[i] = std::min(out.stripped[i], e[i]);
    }
  }
  out.reduced = divide_exact(p, QPoly::monomial(kZT, {out.stripped[0], out.stripped[1], out.stripped[2], 0},
                                                Rational(1)));
  out.ratio = proportional_over(out.reduced, family_symbolic(table), family_variables());
  if (out.ratio) {
    // cancel the common factor in t
    const UPoly<Rational> num = to_upoly(t_poly(out.ratio->first));
    const UPoly<Rational> den = to_upoly(t_poly(out.ratio->second));
    const UPoly<Rational> g = gcd(num, den);
    const Rational scale = (den / g).lead();
    out.ratio->first = with_variables(to_multipoly((num / g) * (Rational(1) / scale), kT, 0), kZT);
    out.ratio->second = with_variables(to_multipoly((den / g) * (Rational(1) / scale), kT, 0), kZT);
  }
  return out;
}

QPoly reducible_branch() {
  const QPoly f = build_ansatz(AnsatzCoefficients<Rational>{Rational(1), Rational(-2), Rational(0), Rational(0)});
  const auto z = [](const char* v) { return QPoly::variable(family_variables(), v); };
  return substitute(f, std::vector<QPoly>{z("z0"), z("z2"), z("z1")});
}

bool check_epsilon_twist(const EisensteinRational& t, const FamilyTable& table) {
  using E = EisensteinRational;
  const E w = E::omega();
  const EPoly twisted = build_family_equation(w * t, table);
  const auto z = [](const char* v) { return EPoly::variable(family_variables(), v); };
  const EPoly pulled = substitute(twisted, std::vector<EPoly>{z("z0"), z("z1") * (w * w), z("z2") * w});
  return proportional(pulled, build_family_equation(t, table));
}

}  // namespace sextic
