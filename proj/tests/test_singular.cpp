#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sextic/curves.hpp"
#include "sextic/poly_text.hpp"
#include "sextic/singular.hpp"

using namespace sextic;

namespace {

const VariableList kXY{"x", "y"};
const VariableList kZ{"z0", "z1", "z2"};

QPoly P(const char* s) { return parse_poly<Rational>(s, kXY); }
QPoly Z(const char* s) { return parse_poly<Rational>(s, kZ); }
Rational R(long p, long q = 1) { return {mpz_class(p), mpz_class(q)}; }

QPoly random_through_origin(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> coef(-3, 3);
  QPoly p(kXY);
  for (int i = 0; i < 5; ++i) {
    int a = deg(rng);
    int b = deg(rng);
    if (a + b == 0) a = 1;
    if (a + b > max_deg) b = max_deg - a;
    p.add_term({a, b}, R(coef(rng)));
  }
  return p;
}

std::array<Rational, 2> origin() { return {R(0), R(0)}; }

}  // namespace

TEST_CASE("local intersection examples") {
  CHECK(local_intersection_multiplicity(P("y"), P("y-x^2"), origin()) == 2);
  CHECK(local_intersection_multiplicity(P("y^2-x^3"), P("y"), origin()) == 3);
  CHECK(local_intersection_multiplicity(P("y^2-x^3"), P("x"), origin()) == 2);
  CHECK(local_intersection_multiplicity(P("x+1"), P("y"), origin()) == 0);
  CHECK(local_intersection_multiplicity(P("(x-2)^2-y"), P("y"), {R(2), R(0)}) == 2);
  CHECK_THROWS_AS(local_intersection_multiplicity(P("x*y"), P("x*(y-1)"), origin()), InfiniteMultiplicityError);
}

TEST_CASE("local intersection agrees with Fulton's algorithm") {
  std::mt19937 rng(20240611);
  int compared = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const QPoly f = random_through_origin(rng, 4);
    const QPoly g = random_through_origin(rng, 4);
    if (f.is_zero() || g.is_zero()) continue;
    int expected = 0;
    try {
      expected = oracle::fulton(f, g);
    } catch (const InfiniteMultiplicityError&) {
      CHECK_THROWS_AS(local_intersection_multiplicity(f, g, origin()), InfiniteMultiplicityError);
      continue;
    }
    int got = -1;
    try {
      got = local_intersection_multiplicity(f, g, origin());
    } catch (const InfiniteMultiplicityError&) {
      continue;  // common component away from the origin
    }
    CHECK(got == expected);
    CHECK(local_intersection_multiplicity(g, f, origin()) == got);
    ++compared;
  }
  CHECK(compared > 60);
}

TEST_CASE("local intersection is at least the product of multiplicities") {
  CHECK(local_intersection_multiplicity(P("y^2-x^3"), P("y^2-x^5"), origin()) >= 4);
  CHECK(local_intersection_multiplicity(P("x^2-y^3"), P("x^3-y^2"), origin()) == 4);
}

TEST_CASE("A_k normal forms") {
  for (int k = 1; k <= 8; ++k) {
    QPoly f = P("y^2") - QPoly::monomial(kXY, {k + 1, 0}, R(1));
    const auto rep = classify_affine(f, origin());
    CHECK(rep.kind == SingularityKind::A);
    CHECK(rep.milnor == k);
    CHECK(rep.hessian_corank == (k == 1 ? 0 : 1));
    CHECK(rep.type_name() == "A" + std::to_string(k));
  }
  const auto d4 = classify_affine(P("x^3-x*y^2"), origin());
  CHECK(d4.kind == SingularityKind::NonA);
  CHECK(d4.hessian_corank == 2);
  CHECK(d4.milnor == 4);
  CHECK(classify_affine(P("y-x^2"), origin()).kind == SingularityKind::Smooth);
  CHECK_THROWS_AS(classify_affine(P("y-x^2-1"), origin()), NotOnCurveError);
}

TEST_CASE("classification is invariant under linear changes") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> c(-3, 3);
  const QPoly x = QPoly::variable(kXY, "x");
  const QPoly y = QPoly::variable(kXY, "y");
  for (const char* s : {"y^2-x^4", "y^2-x^7+x^3*y", "x^2+y^2", "y^2-x^3", "x^3-x*y^2"}) {
    const auto base = classify_affine(P(s), origin());
    for (int trial = 0; trial < 5; ++trial) {
      const int a = c(rng), b = c(rng), d = c(rng), e = c(rng);
      if (a * e - b * d == 0) continue;
      const QPoly moved = substitute(P(s), std::vector<QPoly>{x * R(a) + y * R(b), x * R(d) + y * R(e)});
      const auto rep = classify_affine(moved, origin());
      CHECK(rep.kind == base.kind);
      CHECK(rep.milnor == base.milnor);
    }
  }
}

TEST_CASE("affine model g: three A6 points") {
  const QPoly g = parse_poly<Rational>(reference::g_model, kXY);
  for (const auto& pt : reference::g_singular_points) {
    const auto rep = classify_affine(g, {Rational::parse(pt[0]), Rational::parse(pt[1])});
    CHECK(rep.type_name() == "A6");
  }
  const auto found = find_singular_points(homogenize(g, "z"));
  CHECK(found.unresolved == 0);
  REQUIRE(found.points.size() == 3);
  for (const auto& pt : reference::g_singular_points) {
    const ProjPoint p(E(Rational::parse(pt[0])), E(Rational::parse(pt[1])), E(1));
    CHECK(std::find(found.points.begin(), found.points.end(), p) != found.points.end());
  }
}

TEST_CASE("milnor sums of the family") {
  for (const Rational& t : {R(0), R(5, 6), R(2), R(-1)}) {
    CHECK(milnor_sum(build_family_equation(t)) == 18);
  }
  const QPoly c3 = build_family_equation(R(-3));
  CHECK(milnor_sum(c3) == 19);
  const auto rep = classify_Ak(c3, ProjPoint(E(1), E(1), E(1)));
  CHECK(rep.type_name() == "A1");
  int a6 = 0;
  for (const auto& r : singularity_census(c3)) a6 += r.type_name() == "A6" ? 1 : 0;
  CHECK(a6 == 3);
}

TEST_CASE("extra node of the non-real extra-singular curves") {
  // t = -3w: the extra node sits at (1 : w^2 : w) or a conjugate point.
  const E t = E(R(-3)) * E::omega();
  const auto f = build_family_equation(t);
  CHECK(milnor_sum(f) == 19);
}

TEST_CASE("small curves") {
  CHECK(find_singular_points(Z("z0*z2-z1^2")).points.empty());
  CHECK(milnor_sum(Z("z0^3+z1^3+z2^3")) == 0);

  // Three lines with nodes at (1:1:1), (1:w:w^2), (1:w^2:w).
  const QPoly tri = Z("(z0+z1+z2)*(z0^2+z1^2+z2^2-z0*z1-z1*z2-z2*z0)");
  const auto found = find_singular_points(tri);
  CHECK(found.unresolved == 0);
  CHECK(found.points.size() == 3);
  const E w = E::omega();
  for (const auto& p : {ProjPoint(E(1), E(1), E(1)), ProjPoint(E(1), w, w * w), ProjPoint(E(1), w * w, w)}) {
    CHECK(std::find(found.points.begin(), found.points.end(), p) != found.points.end());
  }
  CHECK(milnor_sum(tri) == 3);
}

TEST_CASE("unresolved points and errors") {
  // Two parabolas: nodes at (+-sqrt 2, 0) and a tacnode at (0:1:0).
  const QPoly f = homogenize(P("y^2-(x^2-2)^2"), "z");
  const auto found = find_singular_points(f);
  CHECK(found.unresolved == 2);
  CHECK(found.points.size() == 1);
  try {
    milnor_sum(f);
    CHECK(false);
  } catch (const UnresolvedPointsError& e) {
    CHECK(e.lower_bound == 3);
    CHECK(e.unresolved == 2);
  }
  CHECK_THROWS_AS(find_singular_points(Z("(z0+z1)^2*z2^4")), MultipleComponentError);
  CHECK_FALSE(is_squarefree_curve(Z("(z0+z1)^2*z2^4")));
  CHECK(is_squarefree_curve(build_family_equation(R(5, 6))));
}

TEST_CASE("C(0) against the coordinate line z2 = 0") {
  const QPoly c0 = build_family_equation(R(0));
  // chart z1 = 1 around (0:1:0): variables (z0, z2) -> (x, y)
  const QPoly near_p = rename(with_variables(specialize(c0, "z1", R(1)), {"z0", "z2"}), kXY);
  CHECK(local_intersection_multiplicity(near_p, P("y"), origin()) == 4);
  // chart z0 = 1 around (1:0:0): variables (z1, z2)
  const QPoly near_q = rename(with_variables(specialize(c0, "z0", R(1)), {"z1", "z2"}), kXY);
  CHECK(local_intersection_multiplicity(near_q, P("y"), origin()) == 2);
  // oracle: order of vanishing of the restriction to the line
  CHECK(oracle::fulton(near_p, P("y")) == 4);
  CHECK(oracle::fulton(near_q, P("y")) == 2);
  // 4 + 2 = 6 = degree: no other intersections with the line
  const UPoly<Rational> restricted = to_upoly(with_variables(specialize(specialize(c0, "z2", R(0)), "z1", R(1)), {"z0"}));
  CHECK(restricted.degree() == 4);
}
