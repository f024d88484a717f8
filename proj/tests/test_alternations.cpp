#include <doctest.h>

#include "ratsign/alternations.hpp"

using namespace ratsign;

TEST_CASE("disorder counts") {
    CHECK(disorders({1, 2, 3}) == 0);
    CHECK(disorders({3, 2, 1}) == 3);
    CHECK(disorders({1, 3, 2, 2, 2, 1}) == 7);
    CHECK(disorders({4, 3, 2, 2, 6}) == 5);
    CHECK(disorders({}) == 0);
}

TEST_CASE("classification of permutations") {
    CHECK(classify({3, 2, 4, 1}) == Classification::ordinary());
    CHECK(classify({2, 5, 4, 3, 1}) == Classification::broken(3));
    CHECK(classify({1, 2}) == Classification::broken(1));
    CHECK(classify({2, 1}) == Classification::ordinary());
    CHECK(classify({1, 2, 3, 4}) == Classification::neither());
}

TEST_CASE("zigzag numbers") {
    const auto a = zigzag_numbers(10);
    const std::vector<long> expected{1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521};
    for (int n = 0; n <= 10; ++n) CHECK(a[n] == expected[n]);
}

TEST_CASE("recursive counts") {
    const auto t = count_recursive(12);
    CHECK(t.B[4] == 7);
    CHECK(t.B[7] == 594);
    CHECK(t.B[12] == 9600567);
    for (int n = 3; n <= 8; ++n) CHECK(t.B_by_pos[n][n] == t.A[n - 1]);
    CHECK(t.B_by_pos[2][1] == 0);
    CHECK(t.B_by_pos[2][2] == 1);
    for (int n = 1; n <= 12; ++n) {
        Integer sum = 0;
        for (int j = 1; j <= n; ++j) sum += t.B_by_pos[n][j];
        CHECK(sum == t.B[n]);
    }
}

TEST_CASE("brute force counts") {
    const auto b4 = count_bruteforce(4);
    CHECK(b4.A == 5);
    CHECK(b4.B == 7);
    const auto b1 = count_bruteforce(1);
    CHECK(b1.A == 1);
    CHECK(b1.B == 0);
    CHECK(count_bruteforce(6).B == 117);
    CHECK_THROWS_AS(count_bruteforce(kBruteForceLimit + 1), SizeLimitError);
    const auto t = count_recursive(8);
    for (int n = 1; n <= 8; ++n) {
        const auto b = count_bruteforce(n);
        CHECK(b.A == t.A[n]);
        CHECK(b.B == t.B[n]);
    }
}

TEST_CASE("closed forms of the base series") {
    const GElement q = GElement::q(), f = GElement::f(), g = GElement::g();
    CHECK(base_series(BaseSeries::u) == -f - q + q * f * f + Rational(2) * f * g);
    CHECK(base_series(BaseSeries::v) == GElement(1) - Rational(2) * f * f - g + q * f * g);
    CHECK(expand(base_series(BaseSeries::u), 1).coeffs[1] == 0);
    CHECK(broken_series(BaseSeries::u, 25) == expand(base_series(BaseSeries::u), 25));
    CHECK(broken_series(BaseSeries::v, 25) == expand(base_series(BaseSeries::v), 25));
}

TEST_CASE("differential equations") {
    CHECK(verify_odes(40));
    CHECK(satisfies_u_ode(base_series(BaseSeries::u), 20));
    CHECK_FALSE(satisfies_u_ode(GElement::f(), 20));
}

TEST_CASE("operator families") {
    const GElement q = GElement::q(), f = GElement::f();
    CHECK(family(Family::f_c, 0) == f);
    CHECK(family(Family::u_c, 0) == base_series(BaseSeries::u));
    CHECK(family(Family::v_c, 0) == base_series(BaseSeries::v));
    CHECK(family(Family::f_c, 1) == Rational(1, 2) * (q * (GElement(1) - f * f) - f));
    for (int n = 0; n <= 5; ++n) {
        CHECK(degrees(family(Family::f_c, n)).deg_f == Degree(BiDegree{n, n + 1}));
        CHECK(degrees(family(Family::u_c, n)).deg_g == Degree(BiDegree{n, n + 2}));
    }
    CHECK(parse_family(family_name(Family::gt_c)) == Family::gt_c);
    CHECK_THROWS(parse_family("h_c"));
}

TEST_CASE("leading coefficients of the u and v families carry n+1") {
    for (int n = 0; n <= 5; ++n) {
        Integer two_n;
        mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(n));
        Rational base(n % 2 == 0 ? Integer(1) : Integer(-1), two_n);
        base.canonicalize();
        CHECK(leading_coefficient(family(Family::f_c, n), Side::f_side) == base);
        CHECK(leading_coefficient(family(Family::u_c, n), Side::f_side) == base * (n + 1));
        CHECK(leading_coefficient(family(Family::u_c, n), Side::g_side) == 2 * base * (n + 1));
    }
}
