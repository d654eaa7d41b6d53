#include "doctest.h"
#include "sextic/curves.hpp"
#include "sextic/pencil.hpp"
#include "sextic/poly_text.hpp"

using namespace sextic;

namespace {

const VariableList kXY{"x", "y"};
const VariableList kY{"y"};

QPoly P(const char* s) { return parse_poly<Rational>(s, kXY); }
QPoly Y(std::string_view s) { return parse_poly<Rational>(s, kY); }
Rational R(long p, long q = 1) { return {mpz_class(p), mpz_class(q)}; }

QPoly g_model() { return parse_poly<Rational>(reference::g_model, kXY); }

std::vector<std::pair<QPoly, int>> published_factors() {
  return {{Y(reference::pencil_factor_deg9), 1},
          {Y("y"), reference::pencil_y_exponent},
          {Y("2*y-1"), reference::pencil_half_exponent}};
}

// Oracle for "f(., eta) has a repeated root or loses x-degree".
bool fibre_is_singular(const QPoly& f, const Rational& eta) {
  const UPoly<Rational> fe = to_upoly(with_variables(specialize(f, 1, eta), {"x"}));
  if (fe.degree() < f.degree_in(0)) return true;
  return gcd(fe, derivative(fe)).degree() > 0;
}

}  // namespace

TEST_CASE("pencil discriminant examples") {
  CHECK(proportional(pencil_discriminant(P("x^2-y")), Y("y")));
  CHECK(proportional(pencil_discriminant(P("(x-y)*(x+y)")), Y("y^2")));
  CHECK_THROWS_AS(pencil_discriminant(P("y^3+1")), DegenerateInput);
  const QPoly d = pencil_discriminant(P("x^3-3*x-y"));
  CHECK(proportional(d, Y("(y-2)*(y+2)")));
  // primitive over Z with positive leading coefficient
  CHECK(d == Y("y^2-4"));
}

TEST_CASE("verify_factorization") {
  CHECK(verify_factorization(Y("y^2*(2*y-1)"), {{Y("y"), 2}, {Y("2*y-1"), 1}}));
  CHECK(verify_factorization(Y("-3*y^2*(2*y-1)"), {{Y("y"), 2}, {Y("y-1/2"), 1}}));
  CHECK_FALSE(verify_factorization(Y("y^2*(2*y-1)"), {{Y("y"), 1}, {Y("2*y-1"), 1}}));
}

TEST_CASE("discriminant of the affine model g") {
  const QPoly d = pencil_discriminant(g_model());
  CHECK(d.total_degree() == 30);
  CHECK(verify_factorization(d, published_factors()));
  auto wrong = published_factors();
  wrong[1].second = reference::pencil_y_exponent - 1;
  CHECK_FALSE(verify_factorization(d, wrong));
  const QPoly deg9 = Y(reference::pencil_factor_deg9);
  CHECK(deg9.total_degree() == 9);
  CHECK(deg9.leading_coefficient() == Rational::parse(reference::pencil_factor_deg9_lead));
  // the published factor is already primitive
  CHECK(integer_primitive(deg9).first == deg9);
}

TEST_CASE("discriminant zeros are exactly the singular fibres") {
  const QPoly f = g_model();
  const UPoly<Rational> d = to_upoly(pencil_discriminant(f));
  for (int k = -12; k <= 12; ++k) {
    const Rational eta = R(k, 8);
    CHECK(d(eta).is_zero() == fibre_is_singular(f, eta));
  }
  CHECK(fibre_is_singular(f, R(0)));
  CHECK(fibre_is_singular(f, R(1, 2)));

  const QPoly h = P("x^3-3*x*y^2+y-x^2");
  const UPoly<Rational> dh = to_upoly(pencil_discriminant(h));
  for (int k = -10; k <= 10; ++k) CHECK(dh(R(k, 3)).is_zero() == fibre_is_singular(h, R(k, 3)));
}

TEST_CASE("singular fibre census of g") {
  const PencilCensus census = singular_fiber_census(g_model());
  REQUIRE(census.real_values.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    const auto& iv = census.real_values[i];
    const Rational centre = Rational::parse(reference::eta_centres[i]);
    CHECK(iv.is_exact() == reference::eta_exact[i]);
    if (iv.is_exact()) {
      CHECK(iv.lo == centre);
    } else {
      CHECK(iv.width() <= R(1, 128));
      CHECK(iv.lo >= centre - R(1, 100));
      CHECK(iv.hi <= centre + R(1, 100));
    }
    if (i > 0) CHECK(census.real_values[i - 1].hi < iv.lo);
  }
  CHECK(census.complex_pair_count == 3);
  int sqfree = 0;
  for (const auto& fc : census.factors) {
    sqfree += fc.factor.degree();
    if (fc.exponent == 1) {
      CHECK(fc.factor.degree() == 9);
      CHECK(fc.real_roots == 3);
      CHECK(fc.complex_pairs == 3);
    }
  }
  CHECK(sqfree == 5 + 2 * census.complex_pair_count);
}

TEST_CASE("census is stable under a shear and its inverse") {
  const QPoly g = g_model();
  const QPoly x = QPoly::variable(kXY, "x");
  const QPoly y = QPoly::variable(kXY, "y");
  const QPoly sheared = substitute(g, std::vector<QPoly>{x + y, y});
  const QPoly back = substitute(sheared, std::vector<QPoly>{x - y, y});
  CHECK(back == g);
  // x -> x + y keeps the horizontal lines, so the census is unchanged
  const auto a = singular_fiber_census(g);
  const auto b = singular_fiber_census(sheared);
  CHECK(a.discriminant == b.discriminant);
  REQUIRE(a.real_values.size() == b.real_values.size());
  for (std::size_t i = 0; i < a.real_values.size(); ++i) {
    CHECK(a.real_values[i].lo == b.real_values[i].lo);
    CHECK(a.real_values[i].hi == b.real_values[i].hi);
  }
}

TEST_CASE("two real lines") {
  const auto census = singular_fiber_census(P("x^2-y^2"));
  REQUIRE(census.real_values.size() == 1);
  CHECK(census.real_values[0].is_exact());
  CHECK(census.real_values[0].lo == R(0));
  CHECK(census.complex_pair_count == 0);
}
