#ifndef SEXTIC_REFERENCE_DATA_HPP
#define SEXTIC_REFERENCE_DATA_HPP

// Published data that the verification suite compares against. Everything
// here is transcribed input; nothing in this header is computed.

#include <array>
#include <string_view>

namespace sextic::reference {

struct OrbitCoefficient {
  std::array<int, 3> exponents;  // one representative of the cyclic orbit
  std::string_view coefficient;  // polynomial in t
};

// The D14-sextic family C(t), by cyclic monomial orbits in z0, z1, z2.
inline constexpr std::array<OrbitCoefficient, 7> family_orbits{{
    {{4, 1, 1}, "2*t*(t^3-1)"},
    {{4, 2, 0}, "t^3-1"},
    {{4, 0, 2}, "t^2*(t^3-1)"},
    {{3, 3, 0}, "2*t*(t^3+1)"},
    {{3, 2, 1}, "4*t^2*(t^3+2)"},
    {{3, 1, 2}, "2*(t^6+4*t^3+1)"},
    {{2, 2, 2}, "t*(t^6+13*t^3+10)"},
}};

inline constexpr std::string_view triple_conic = "4*(z0*z1+z1*z2+z2*z0)^3";

// Conditions for the ansatz to be singular at (1:t:t^2); columns a, b, c, d.
inline constexpr std::array<std::array<std::string_view, 4>, 3> singular_system{{
    {"6*t^4", "3*t^4+3*t^7", "5*t^5+t^8", "2*t^6"},
    {"4*t^3+2*t^9", "2*t^3+4*t^6", "4*t^4+2*t^7", "2*t^5"},
    {"4*t^8+2*t^2", "t^2+5*t^5", "3*t^3+3*t^6", "2*t^4"},
}};

inline constexpr std::array<std::string_view, 4> ray_b_plus{"t^2", "2*t^2", "-2*t*(t^3+2)", "(t^3+2)^2"};
inline constexpr std::array<std::string_view, 4> ray_b_minus{"1", "-2", "-2*t^2", "t*(t^3+8)"};

inline constexpr std::string_view square_root_cubic = "t*u1^2*u0-2*u1*u2*u0-u1*u2*u0*t^3+t*u0^2*u2+t*u1*u2^2";

// Affine model of C(5/6) in the chart Z = 1 after the epi change.
inline constexpr std::string_view g_model =
    "716/19683*x+17872/177147*y-11503/708588*x*y-356093/354294*x*y^2+322559/5668704*x^3*y"
    "+3568/177147-722513/2834352*x^2*y-8137/472392*x^2-28582655/2834352*x*y^5+56261293/22674816*y^4"
    "-449027/1417176*y^2-4427549/2834352*y^3+81485377/11337408*y^5-255219619/22674816*y^6"
    "-57539/1417176*x^3+2243/209952*x^4-26011/5668704*x^6+2726579/7558272*x^2*y^2"
    "+1092623/1259712*x*y^3+9868757/11337408*x^3*y^2+11718893/3779136*x^2*y^3+77768419/11337408*x*y^4"
    "-309307/5668704*y*x^5-9030539/22674816*x^4*y^2-9923629/5668704*x^3*y^3"
    "-61362175/11337408*x^2*y^4+12505/944784*x^5+397175/2834352*x^4*y";

inline constexpr std::array<std::array<std::string_view, 2>, 3> g_singular_points{{
    {"-1", "0"},
    {"2", "0"},
    {"-1/2", "1/2"},
}};

inline constexpr std::string_view pencil_factor_deg9 =
    "90617210907008*y^9-60741238168704*y^8-52338630572904*y^7+38781803208839*y^6"
    "+8841431367018*y^5-8143800845364*y^4-176669916264*y^3+512733413664*y^2"
    "-7789219200*y-6298560000";
inline constexpr std::string_view pencil_factor_deg9_lead = "90617210907008";
inline constexpr int pencil_y_exponent = 14;
inline constexpr int pencil_half_exponent = 7;  // exponent of (2y-1)

// Real singular fibres y = eta: approximations ("lo", "hi" are not given,
// only the centre) and the two exact values.
inline constexpr std::array<std::string_view, 5> eta_centres{"-26/100", "-11/100", "0", "14/100", "1/2"};
inline constexpr std::array<bool, 5> eta_exact{false, false, true, false, true};
inline constexpr int complex_pairs = 3;

inline constexpr std::string_view group_G = "<w,x | x^2, w^2=x*w^5*x>";
inline constexpr std::string_view group_G_alt = "<w,x | x^2, w^21, x*w^15*x=w^6, [w^7,x]>";
inline constexpr std::string_view group_D14xC3 = "<a,b,x | x^2, a^3, b^7, x*b*x=b^6, [a,b], [a,x]>";

// Vectors gamma_0, gamma_1, gamma_2 in discr of 3 A6 = (Z/7)^3, coordinate i
// being the coefficient of the generator at the i-th point.
inline constexpr std::array<std::array<int, 3>, 3> gamma{{{4, 2, 1}, {1, 4, 2}, {2, 1, 4}}};

}  // namespace sextic::reference

#endif  // SEXTIC_REFERENCE_DATA_HPP
