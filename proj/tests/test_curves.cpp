#include "doctest.h"
#include "sextic/curves.hpp"
#include "sextic/poly_text.hpp"

using namespace sextic;

namespace {

const VariableList kZ{"z0", "z1", "z2"};
const VariableList kT{"t"};
const VariableList kUT{"u0", "u1", "u2", "t"};

QPoly Z(const char* s) { return parse_poly<Rational>(s, kZ); }

Rational R(long p, long q = 1) { return {mpz_class(p), mpz_class(q)}; }

}  // namespace

TEST_CASE("family at t=1 degenerates to the triple conic") {
  CHECK(build_family_equation(R(1)) == Z("4*(z0*z1+z1*z2+z2*z0)^3"));
  CHECK(build_family_equation(R(1)).size() == 10);
}

TEST_CASE("family coefficients at t=5/6 and t=0") {
  const Rational t = R(5, 6);
  // 2t(t^3 - 1) by hand
  const Rational expected = R(2) * t * (t * t * t - R(1));
  CHECK(expected == R(-455, 648));
  CHECK(build_family_equation(t).coefficient({4, 1, 1}) == expected);

  const QPoly c0 = build_family_equation(R(0));
  CHECK(c0.coefficient({4, 1, 1}).is_zero());
  CHECK(c0.coefficient({4, 2, 0}) == R(-1));
}

TEST_CASE("family shape over sampled t") {
  const QPoly sym = family_symbolic();
  CHECK(sym.degree_in("t") <= 7);
  CHECK(is_cyclically_symmetric(sym));
  for (const Rational& t : {R(0), R(5, 6), R(2), R(-1), R(-3), R(7, 11), R(-2, 9)}) {
    const QPoly f = build_family_equation(t);
    CHECK(f.is_homogeneous());
    CHECK(f.total_degree() == 6);
    CHECK(f.size() <= 22);
    CHECK(is_cyclically_symmetric(f));
  }
}

TEST_CASE("build_ansatz examples") {
  const auto u = [](const char* s) { return parse_poly<Rational>(s, ansatz_variables()); };
  CHECK(build_ansatz(AnsatzCoefficients<Rational>{R(1), R(0), R(0), R(0)}) == u("u0^4*u2^2+u1^4*u0^2+u2^4*u1^2"));
  CHECK(build_ansatz(AnsatzCoefficients<Rational>{R(0), R(0), R(0), R(1)}) == u("u0^2*u1^2*u2^2"));
  const QPoly any = build_ansatz(AnsatzCoefficients<Rational>{R(3, 2), R(-7), R(5), R(1, 9)});
  CHECK(is_cyclically_symmetric(any, ansatz_variables()));
  CHECK(any.size() == 10);
}

TEST_CASE("singular condition system matches the printed equations") {
  const LinearSystem sys = singular_condition_system();
  REQUIRE(sys.size() == 3);
  CHECK(sys[0][0] == parse_poly<Rational>("6*t^4", kT));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t k = 0; k < 4; ++k) {
      CHECK(sys[i][k] == parse_poly<Rational>(reference::singular_system[i][k], kT));
    }
  }
  // Rank 2: the kernel is a plane, cut to a line by b = 2a or b = -2a.
  CHECK(system_rank(sys) == 2);
}

TEST_CASE("solution rays") {
  const LinearSystem sys = singular_condition_system();
  const auto plus = solution_ray(sys, +1);
  const auto minus = solution_ray(sys, -1);
  CHECK(same_ray(plus, parse_ray(reference::ray_b_plus)));
  CHECK(same_ray(minus, parse_ray(reference::ray_b_minus)));
  CHECK_FALSE(same_ray(plus, minus));
  // The published rays annihilate every equation.
  for (const auto& ray : {parse_ray(reference::ray_b_plus), parse_ray(reference::ray_b_minus)}) {
    for (const auto& row : sys) {
      QPoly acc(kT);
      for (std::size_t k = 0; k < 4; ++k) acc += row[k] * ray[k];
      CHECK(acc.is_zero());
    }
  }
}

TEST_CASE("square factorization on the b=2a ray") {
  const auto ray = parse_ray(reference::ray_b_plus);
  const QPoly cubic = parse_poly<Rational>(reference::square_root_cubic, kUT);
  CHECK(verify_square_factorization(ray, cubic));

  // t = 2: expand both sides numerically.
  const QPoly lhs = specialize(build_ansatz_symbolic(ray), "t", R(2));
  const QPoly c2 = specialize(cubic, "t", R(2));
  CHECK(lhs == c2 * c2);

  auto bumped = ray;
  bumped[3] += QPoly::constant(kT, R(1));
  CHECK_FALSE(verify_square_factorization(bumped, cubic));
}

TEST_CASE("apply_change: affine model of C(5/6)") {
  const QPoly c = build_family_equation(R(5, 6));
  const QPoly moved = apply_change(c, named_change("paper-epi"));
  const QPoly g = affine_chart(moved, "Z", {"x", "y"});
  const QPoly expected = parse_poly<Rational>(reference::g_model, {"x", "y"});
  CHECK(expected.size() == 28);
  CHECK(proportional(g, expected));
  CHECK(g.coefficient({1, 0}) == R(716, 19683));
  CHECK(g == expected);
}

TEST_CASE("apply_change: identity and inverse") {
  const QPoly c = build_family_equation(R(2, 7));
  CHECK(apply_change(c, identity_change<Rational>(kZ)) == c);
  const auto ch = named_change("paper-epi");
  const auto back = inverse(ch);
  for (const Rational& t : {R(0), R(5, 6), R(-3)}) {
    const QPoly f = build_family_equation(t);
    CHECK(apply_change(apply_change(f, ch), back) == f);
  }
  CHECK_THROWS_AS(inverse(named_change("triangular")), DomainError);
  CHECK_THROWS_AS(named_change("nope"), DomainError);
}

TEST_CASE("singular linear change is rejected") {
  const auto c = [](int v) { return QPoly::constant(kZ, R(v)); };
  CHECK_THROWS_AS(make_linear_change<Rational>("bad", kZ, kZ, kZ, {{c(1), c(2), c(3)}, {c(2), c(4), c(6)}, {c(0), c(0), c(1)}}),
                  DomainError);
}

TEST_CASE("ansatz route reproduces the family up to a scalar") {
  const auto rec = reconstruct_via_ansatz();
  CHECK(rec.stripped == Exponents{2, 2, 2});
  REQUIRE(rec.ratio.has_value());
  // reduced / family = ratio.first / ratio.second = (t^3 - 1)^3
  const QPoly t3 = parse_poly<Rational>("(t^3-1)^3", {"z0", "z1", "z2", "t"});
  CHECK(rec.ratio->first == rec.ratio->second * t3);
}

TEST_CASE("reducible branch at t=0") {
  const QPoly branch = reducible_branch();
  const QPoly c0 = build_family_equation(R(0));
  CHECK(proportional(branch, c0));
  CHECK(branch == -c0);
}

TEST_CASE("epsilon twist") {
  using E = EisensteinRational;
  for (const Rational& t : {R(0), R(5, 6), R(-3), R(2), R(-1, 4)}) CHECK(check_epsilon_twist(E(t)));
  CHECK(check_epsilon_twist(E(R(1), R(1))));
}
