#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sextic/eisenstein.hpp"
#include "sextic/int_matrix.hpp"
#include "sextic/multipoly.hpp"
#include "sextic/poly_text.hpp"
#include "sextic/rational.hpp"
#include "sextic/resultant.hpp"
#include "sextic/roots.hpp"
#include "sextic/upoly.hpp"

using namespace sextic;

namespace {

using Poly = MultiPoly<Rational>;
const VariableList kXY{"x", "y"};
const VariableList kXYZ{"x", "y", "z"};

Poly P(const char* s, const VariableList& v = kXY) { return parse_poly<Rational>(s, v); }

Rational random_rational(std::mt19937& rng, int span = 7) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, 4);
  return {mpz_class(num(rng)), mpz_class(den(rng))};
}

Poly random_poly(std::mt19937& rng, const VariableList& vars, int max_deg, int terms) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  Poly p(vars);
  for (int k = 0; k < terms; ++k) {
    Exponents e(vars.size());
    for (auto& x : e) x = deg(rng);
    p.add_term(e, random_rational(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(Rational::parse("6/4") == Rational(3) / Rational(2));
  CHECK(Rational::parse("-0/5").str() == "0");
  CHECK(Rational::parse(" 17 ").str() == "17");
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK(mod(Rational(-6, 7), Rational(2)) == Rational(8, 7));
  CHECK(mod(Rational(-18), Rational(2)).is_zero());
}

TEST_CASE("Eisenstein rationals satisfy w^3 = 1 and 1 + w + w^2 = 0") {
  const auto w = EisensteinRational::omega();
  CHECK(pow(w, 3) == EisensteinRational(1));
  CHECK((EisensteinRational(1) + w + w * w).is_zero());
  CHECK(w.conj() == w * w);
  CHECK(EisensteinRational::parse("1/2-3/4*w") == EisensteinRational(Rational(1, 2), Rational(-3, 4)));
  CHECK(EisensteinRational::parse("-w") == -w);
  CHECK(EisensteinRational::parse(w.str()) == w);

  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    EisensteinRational a(random_rational(rng), random_rational(rng));
    EisensteinRational b(random_rational(rng), random_rational(rng));
    EisensteinRational c(random_rational(rng), random_rational(rng));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(EisensteinRational::parse(a.str()) == a);
  }
}

TEST_CASE("poly_arith examples") {
  CHECK(P("x+y") * P("x-y") == P("x^2-y^2"));
  CHECK((P("x+y") * Poly(kXY)).is_zero());
  const VariableList z{"z0", "z1", "z2"};
  const auto q = pow(parse_poly<Rational>("z0*z1+z1*z2+z2*z0", z), 3) * Rational(4);
  CHECK(q.size() == 10);
  CHECK(q.coefficient({2, 2, 2}) == Rational(24));
  CHECK(q.coefficient({3, 3, 0}) == Rational(4));
  CHECK(q.coefficient({3, 2, 1}) == Rational(12));
  CHECK_THROWS_AS(P("x") + P("x", kXYZ), DomainError);
}

TEST_CASE("ring axioms on random samples") {
  std::mt19937 rng(20240611);
  for (int i = 0; i < 60; ++i) {
    const auto a = random_poly(rng, kXYZ, 3, 5);
    const auto b = random_poly(rng, kXYZ, 3, 5);
    const auto c = random_poly(rng, kXYZ, 3, 5);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    const auto ab = a * b;
    for (const auto& [e, coef] : ab.terms()) CHECK(!coef.is_zero());
  }
}

TEST_CASE("text format round-trips") {
  std::mt19937 rng(99);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_poly(rng, kXYZ, 4, 6);
    CHECK(parse_poly<Rational>(to_string(a), kXYZ) == a);
  }
  CHECK(to_string(P("-x^2*y + 3/4 - 2*x")) == "-x^2*y - 2*x + 3/4");
  CHECK(P("z[0]", VariableList{"z0"}).total_degree() == 1);
  const auto e = parse_poly<EisensteinRational>("(1+2*w)*x - w*y + 3", kXY);
  CHECK(parse_poly<EisensteinRational>(to_string(e), kXY) == e);
  CHECK_THROWS_AS(P("x + q"), ParseError);
  CHECK_THROWS_AS(P("x/0"), ParseError);
}

TEST_CASE("substitute") {
  const auto p = P("x^2+y^2");
  CHECK(substitute(p, {P("x+1"), Poly(kXY)}) == P("x^2+2*x+1"));
  CHECK(substitute(p, {P("x"), P("y")}) == p);

  // Functoriality: (p o m1) o m2 == p o (m1 o m2).
  std::mt19937 rng(5);
  for (int i = 0; i < 20; ++i) {
    const auto q = random_poly(rng, kXY, 3, 4);
    const std::vector<Poly> m1{random_poly(rng, kXY, 2, 3), random_poly(rng, kXY, 2, 3)};
    const std::vector<Poly> m2{random_poly(rng, kXY, 2, 3), random_poly(rng, kXY, 2, 3)};
    const std::vector<Poly> composed{substitute(m1[0], m2), substitute(m1[1], m2)};
    CHECK(substitute(substitute(q, m1), m2) == substitute(q, composed));
  }
}

TEST_CASE("resultant examples") {
  CHECK(resultant(P("x^2-y"), P("x-1"), "x") == P("1-y"));
  CHECK(resultant(P("x^2-2"), P("x^2-2"), "x").is_zero());
  CHECK_THROWS_AS(resultant(P("y"), P("y^2"), "x"), DegenerateInput);
  CHECK(resultant(P("y"), P("x^2+1"), "x") == P("y^2"));
}

TEST_CASE("resultant properties on samples") {
  std::mt19937 rng(11);
  for (int i = 0; i < 15; ++i) {
    const auto p = random_poly(rng, kXY, 3, 4) + P("x^3");
    const auto q = random_poly(rng, kXY, 2, 4) + P("x^2");
    const auto r = random_poly(rng, kXY, 2, 3) + P("x");
    const int m = p.degree_in("x");
    const int n = q.degree_in("x");
    const auto pq = resultant(p, q, "x");
    // Multiplicativity.
    CHECK(resultant(p * r, q, "x") == pq * resultant(r, q, "x"));
    // Antisymmetry.
    CHECK(resultant(q, p, "x") == ((m * n) % 2 ? -pq : pq));
    // Evaluation: Res_x(p, x - c) = (-1)^m p(c, y).
    const Rational c = random_rational(rng);
    const auto at_c = specialize(p, "x", c);
    CHECK(resultant(p, P("x") - constant_like(p, c), "x") == (m % 2 ? -at_c : at_c));
  }
}

TEST_CASE("univariate gcd and squarefree factorisation") {
  using U = UPoly<Rational>;
  const U x = U::x();
  const U a = x - U::constant(1);
  const U b = x * Rational(2) - U::constant(1);
  const U p = a * a * a * b * x;
  const auto f = squarefree_factorization(p);
  REQUIRE(f.size() == 2);
  CHECK(f[0].second == 1);
  CHECK(f[0].first == monic(b * x));
  CHECK(f[1].second == 3);
  CHECK(f[1].first == a);
  CHECK(squarefree_part(p) == monic(a * b * x));
  CHECK(root_multiplicity(p, Rational(1)) == 3);
}

TEST_CASE("sturm_isolate examples") {
  const auto two = sturm_isolate(P("x^2-2", {"x"}));
  REQUIRE(two.size() == 2);
  CHECK(two[0].hi < Rational(0));
  CHECK(two[1].lo > Rational(0));
  CHECK(refine(two[0], Rational(1, 1000)).hi < Rational(-141, 100));
  CHECK(refine(two[1], Rational(1, 1000)).lo > Rational(141, 100));
  CHECK(sturm_isolate(P("x^2+1", {"x"})).empty());
  CHECK_THROWS_AS(sturm_isolate(Poly(VariableList{"x"})), DomainError);

  const auto mixed = sturm_isolate(P("(2*x-1)^3*x*(x^2-3)*(x^2+x+1)", {"x"}));
  REQUIRE(mixed.size() == 4);
  CHECK(mixed[1].is_exact());
  CHECK(mixed[1].lo.is_zero());
  CHECK(mixed[2].is_exact());
  CHECK(mixed[2].lo == Rational(1, 2));
  for (std::size_t i = 1; i < mixed.size(); ++i) CHECK(mixed[i - 1].hi < mixed[i].lo);
}

TEST_CASE("sturm count agrees with the grid oracle") {
  std::mt19937 rng(314);
  using U = UPoly<Rational>;
  for (int i = 0; i < 25; ++i) {
    // Roots spread on a 1/4 grid, kept distinct; times x^2+1 and x^2-k.
    std::uniform_int_distribution<int> pick(-24, 24);
    std::vector<int> roots;
    while (roots.size() < 4) {
      const int r = pick(rng);
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    U p = U::constant(1);
    for (int r : roots) p = p * (U::x() - U::constant(Rational(r, 4)));
    p = p * U(std::vector<Rational>{1, 0, 1});
    if (i % 2 == 0) p = p * U(std::vector<Rational>{-2 - 4 * i, 0, 1});
    const auto ivs = sturm_isolate(p);
    CHECK(static_cast<int>(ivs.size()) == oracle::grid_sign_changes(p, Rational(16)));
    CHECK(static_cast<int>(ivs.size()) == count_real_roots(p));
  }
}

TEST_CASE("smith_normal_form examples") {
  CHECK(smith_normal_form(IntMatrix{{0, 2}, {3, 2}}).invariant_factors == std::vector<mpz_class>{1, 6});
  CHECK(smith_normal_form(IntMatrix{{1, 0}, {0, 1}}).invariant_factors == std::vector<mpz_class>{1, 1});
  CHECK(smith_normal_form(IntMatrix{{2, 0}, {0, 2}}).invariant_factors == std::vector<mpz_class>{2, 2});
  const auto s = smith_normal_form(IntMatrix{{0, 2}, {3, 2}});
  CHECK(s.diagonal(0, 1) == 0);
  CHECK(s.diagonal(1, 0) == 0);
}

TEST_CASE("smith_normal_form agrees with determinantal divisors") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> v(-9, 9);
  std::uniform_int_distribution<int> dim(1, 3);
  for (int i = 0; i < 300; ++i) {
    IntMatrix m(dim(rng), dim(rng));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = v(rng) * (i % 3 == 0 ? 2 : 1);
    }
    const auto s = smith_normal_form(m);
    const auto oracle = oracle::determinantal_factors(m);
    CHECK(s.invariant_factors == oracle);
    for (std::size_t k = 1; k < s.invariant_factors.size(); ++k) {
      if (s.invariant_factors[k] != 0) CHECK(s.invariant_factors[k] % s.invariant_factors[k - 1] == 0);
    }
  }
}

TEST_CASE("Bareiss determinant and rank over Q[t]") {
  const VariableList t{"t"};
  auto T = [&](const char* s) { return parse_poly<Rational>(s, t); };
  PolyMatrix<Rational> m{{T("t"), T("1")}, {T("1"), T("t")}};
  CHECK(bareiss_determinant(m) == T("t^2-1"));
  PolyMatrix<Rational> sing{{T("t"), T("t^2"), T("1")}, {T("1"), T("t"), T("0")}, {T("t+1"), T("t^2+t"), T("1")}};
  CHECK(bareiss_determinant(sing).is_zero());
  CHECK(bareiss_rank(sing) == 2);
}
