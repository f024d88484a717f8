#include <doctest.h>

#include "ratsign/algebra.hpp"
#include "ratsign/alternations.hpp"

using namespace ratsign;

namespace {
const GElement q = GElement::q(), f = GElement::f(), g = GElement::g();
}

TEST_CASE("rationals print and parse as p/q") {
    CHECK(to_string(Rational(-3, 4)) == "-3/4");
    CHECK(to_string(Rational(5)) == "5");
    CHECK(parse_rational("6/8") == Rational(3, 4));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("multiplication reduces g squared") {
    CHECK(g * g == GElement(1) - f * f);
    const GElement x = q * f * g + Rational(3, 2) * f;
    CHECK(GElement(1) * x == x);
    CHECK((f + g) * (f - g) == Rational(2) * f * f - GElement(1));
    CHECK(g_multiply(g, g) == g * g);
    CHECK(power(g, 3) == g - f * f * g);
}

TEST_CASE("derivation on generators and products") {
    CHECK(apply_D(f) == q - q * f * f);
    CHECK(apply_D(GElement(1)).is_zero());
    CHECK(apply_D(f * g) == q * g - Rational(2) * q * f * f * g);
    CHECK(apply_D(q) == q);
    const GElement a = q * f * f + g, b = f * g - q;
    CHECK(apply_D(a * b) == apply_D(a) * b + a * apply_D(b));
}

TEST_CASE("degrees and leading coefficients") {
    CHECK(degrees(q * f * f + f).deg_f == Degree(BiDegree{1, 2}));
    CHECK(degrees(Rational(2) * f * g).deg_g == Degree(BiDegree{0, 2}));
    const auto zero = degrees(GElement());
    CHECK_FALSE(zero.deg_f.has_value());
    CHECK_FALSE(zero.deg_g.has_value());
    CHECK(leading_coefficient(Rational(-2) * f * f + GElement(1), Side::f_side) == -2);
    CHECK(leading_coefficient(q * f * g, Side::g_side) == 1);
    CHECK(leading_coefficient(apply_D(power(f, 3)), Side::f_side) == -3);
    CHECK_THROWS_AS(leading_coefficient(f, Side::g_side), std::domain_error);
}

TEST_CASE("expansions of f and g") {
    const auto s = expand(f, 5);
    CHECK(s.coeffs[0] == 0);
    CHECK(s.coeffs[1] == 1);
    CHECK(s.coeffs[3] == Rational(-1, 3));
    CHECK(s.coeffs[5] == Rational(2, 15));
    for (int n : {0, 3, 17}) {
        TruncatedSeries one(n);
        one.coeffs[0] = 1;
        CHECK(expand(f * f + g * g, n) == one);
    }
    CHECK(expand(base_series(BaseSeries::u), 5).coeffs[5] == Rational(13, 60));
    CHECK(derivative(expand(f, 10)) == expand(GElement(1) - f * f, 9));
}

TEST_CASE("expansion is a ring homomorphism") {
    const GElement a = q * f + g * f * f, b = g - Rational(1, 3) * q * q * f;
    CHECK(expand(a * b, 15) == expand(a, 15) * expand(b, 15));
}

TEST_CASE("independence of monomial expansions") {
    CHECK(independence_rank(BiDegree{2, 2}, 20));
    CHECK(minimal_independence_order(BiDegree{0, 0}) == 2);
    CHECK_THROWS_AS(independence_rank(BiDegree{0, 0}, 0), InsufficientOrder);
    CHECK(independence_rank(BiDegree{0, 0}));
    CHECK(expansion_rank(BiDegree{0, 0}, 2) == 2);
    CHECK(monomial_count(BiDegree{8, 8}) == 162);
    CHECK(expansion_rank(BiDegree{8, 8}, 40) == 41);
}

TEST_CASE("JSON round trip of elements") {
    const GElement a = Rational(-7, 3) * q * f * g + Rational(1, 2) * f * f - GElement(4);
    const auto j = to_json(a);
    CHECK(gelement_from_json(j) == a);
    CHECK(to_json(gelement_from_json(j)).dump() == j.dump());
}
