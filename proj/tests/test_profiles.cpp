#include <doctest.h>

#include <random>

#include "ratsign/profiles.hpp"

using namespace ratsign;

TEST_CASE("profile statistics") {
    const auto e = stats({{}, Parity::odd});
    CHECK(e.c_frak == 0);
    CHECK(e.o_frak == 0);
    CHECK(e.e_frak == 0);
    CHECK(e.b_frak == 0);
    CHECK(e.A == 1);
    const auto s = stats({{{3, 2, 1, 1}, {3, 2, 2}}, Parity::odd});
    CHECK(s.c_frak == 2);
    CHECK(s.o_frak == 2);
    CHECK(s.e_frak == 1);
    CHECK(s.b_frak == 0);
    CHECK(s.A == 1);
    const auto t = stats({{{2, 2, 2}}, Parity::odd});
    CHECK(t.c_frak == 1);
    CHECK(t.o_frak == 0);
    CHECK(t.e_frak == 1);
    CHECK(t.A == 1);
}

TEST_CASE("vanishing criteria") {
    for (Parity p : {Parity::odd, Parity::even}) {
        CHECK(trivially_vanishes({{{3, 1}}, p}).has_value());
        CHECK_FALSE(nonvanishing({{{3, 1}}, p}));
        CHECK(nonvanishing({{{2, 2}}, p}));
        CHECK_FALSE(trivially_vanishes({{}, p}).has_value());
    }
    CHECK(trivially_vanishes({{{2, 1}}, Parity::odd}).has_value());
    CHECK_FALSE(trivially_vanishes({{{2, 1}}, Parity::even}).has_value());
    CHECK_FALSE(nonvanishing({{{2, 1}}, Parity::odd}));
    CHECK(nonvanishing({{{2, 1}}, Parity::even}));
}

TEST_CASE("vanishing predicates agree on random profiles") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> count(0, 3), len(1, 5), entry(1, 6);
    for (int i = 0; i < 2000; ++i) {
        ReducedProfiles l;
        l.parity = i % 2 ? Parity::odd : Parity::even;
        for (int k = count(rng); k > 0; --k) {
            Partition p;
            for (int n = len(rng); n > 0; --n) p.push_back(entry(rng));
            std::sort(p.rbegin(), p.rend());
            l.partitions.push_back(p);
        }
        CHECK(nonvanishing(l) == !trivially_vanishes(l).has_value());
    }
}

TEST_CASE("degree bounds for the empty profile") {
    const auto odd = degree_bounds({{}, Parity::odd});
    CHECK(odd.deg_f == BiDegree{1, 2});
    CHECK(odd.deg_g == BiDegree{0, 2});
    const auto even = degree_bounds({{}, Parity::even});
    CHECK(even.deg_f == BiDegree{0, 2});
    CHECK(even.deg_g == BiDegree{1, 2});
}

TEST_CASE("simple bases of small profiles") {
    const auto c = enumerate_simple_bases({{}, Parity::odd}, BaseType::C);
    REQUIRE(c.size() == 1);
    CHECK(c[0].sign == 1);
    CHECK(enumerate_simple_bases({{}, Parity::odd}, BaseType::B).empty());
    CHECK(summarize_simple_bases({{{2}}, Parity::even}, BaseType::C).signed_sum == 1);
    CHECK_FALSE(nonvanishing({{{2}}, Parity::odd}));
    for (const auto& lambda : std::vector<std::vector<Partition>>{{{3}, {1, 1}}, {{3, 3, 1}}, {{5}, {3}, {1}}}) {
        const ReducedProfiles l{lambda, Parity::odd};
        REQUIRE(stats(l).e_frak == 0);
        const int expected = stats(l).o_frak % 2 ? -1 : 1;
        for (const auto& b : enumerate_simple_bases(l, BaseType::C)) CHECK(b.sign == expected);
    }
}

TEST_CASE("closed simple-base counts") {
    CHECK(simple_base_counts_closed({{}, Parity::odd}).count_C == 1);
    CHECK(simple_base_counts_closed({{{2, 2}}, Parity::odd}).count_C == 1);
    const auto b = simple_base_counts_closed({{{2}}, Parity::odd}).count_B;
    REQUIRE(b.has_value());
    CHECK(*b == 2);
}

TEST_CASE("enumerated and closed signed sums agree") {
    const std::vector<std::vector<Partition>> cases{
        {}, {{2}}, {{2, 2}}, {{3, 3}}, {{3}, {2}}, {{2, 1}}, {{4, 2}, {1}}, {{3, 2, 2}}, {{2}, {2}, {4}}};
    for (const auto& lambda : cases)
        for (Parity p : {Parity::odd, Parity::even}) {
            const ReducedProfiles l{lambda, p};
            if (!nonvanishing(l)) continue;
            for (BaseType t : {BaseType::C, BaseType::B})
                if (const auto pred = predicted_signed_sum(l, t)) CHECK(summarize_simple_bases(l, t).signed_sum == *pred);
        }
}

TEST_CASE("leading coefficients for the empty profile") {
    const auto lc = leading_coefficients({{}, Parity::odd});
    REQUIRE(lc.size() == 4);
    CHECK(lc[0].monomial == BiDegree{1, 2});
    CHECK(lc[0].coefficient == 1);
    CHECK(lc[1].monomial == BiDegree{0, 2});
    CHECK(lc[1].coefficient == 2);
    CHECK(lc[2].monomial == BiDegree{0, 2});
    CHECK(lc[2].coefficient == -2);
    CHECK(lc[3].monomial == BiDegree{1, 2});
    CHECK(lc[3].coefficient == 1);
}

TEST_CASE("profile parsing") {
    CHECK(parse_profiles("").empty());
    CHECK(parse_profiles("-").empty());
    CHECK(parse_profiles("3,2;1,2") == std::vector<Partition>{{3, 2}, {2, 1}});
    CHECK_THROWS_AS(parse_profiles("3;x"), std::invalid_argument);
    CHECK(parse_parity("even") == Parity::even);
    CHECK_THROWS(parse_parity("both"));
}
