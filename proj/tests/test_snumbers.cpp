#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ratsign/alternations.hpp"
#include "ratsign/snumbers.hpp"

using namespace ratsign;

namespace {

BaseDescriptor single_chain(BaseType t, Parity p) {
    BaseDescriptor b;
    b.base_type = t;
    b.parity = p;
    b.sp = 1;
    b.c = {0};
    return b;
}

}  // namespace

TEST_CASE("descriptor validation") {
    auto b = single_chain(BaseType::C, Parity::odd);
    CHECK_NOTHROW(validate(b));
    b.sp = 2;
    CHECK_THROWS_AS(validate(b), InvalidDescriptor);
    auto a = single_chain(BaseType::A, Parity::odd);
    a.c = {1};
    CHECK_THROWS_AS(validate(a), InvalidDescriptor);
    auto e = single_chain(BaseType::A, Parity::even);
    CHECK_THROWS_AS(validate(e), InvalidDescriptor);
    auto l = single_chain(BaseType::C, Parity::odd);
    l.labels = {{{2, 1}, {1, 0}}};
    CHECK_THROWS_AS(validate(l), InvalidDescriptor);
}

TEST_CASE("base signs") {
    CHECK(epsilon_base(single_chain(BaseType::C, Parity::odd)) == 1);
    BaseDescriptor sorted;
    sorted.base_type = BaseType::C;
    sorted.c = {0, 0, 0};
    sorted.sp = 3;
    sorted.labels = {{{1, 0}, {2, 1}, {3, 2}}};
    CHECK(epsilon_base(sorted) == 1);

    BaseDescriptor b;
    b.base_type = BaseType::B;
    b.c = {0, 0};
    b.sp = 1;
    b.labels = {{{2, 1}}};
    CHECK(sign_sequence(b, 0) == std::vector<int>{1, 2});
    CHECK(epsilon_base(b) == 1);
    b.labels = {{{2, 0}}};
    CHECK(sign_sequence(b, 0) == std::vector<int>{2, 1});
    CHECK(epsilon_base(b) == -1);
}

TEST_CASE("assembled functions for a single chain") {
    CHECK(assemble_FB(single_chain(BaseType::C, Parity::odd)) == base_series(BaseSeries::u));
    CHECK(assemble_FB(single_chain(BaseType::C, Parity::even)) == base_series(BaseSeries::v));
}

TEST_CASE("S-numbers of the empty profile") {
    const auto odd = s_numbers_empty(21, Parity::odd);
    const auto even = s_numbers_empty(21, Parity::even);
    CHECK(odd.diagnostics.at("matches_broken_alternations").get<bool>());
    CHECK(even.diagnostics.at("matches_broken_alternations").get<bool>());
    CHECK(odd.values[0] == std::pair<int, Integer>{1, 0});
    CHECK(odd.values[1] == std::pair<int, Integer>{3, -2});
    CHECK(odd.values[2] == std::pair<int, Integer>{5, 26});
    CHECK(even.values[1] == std::pair<int, Integer>{2, -1});
    CHECK(even.values[2] == std::pair<int, Integer>{4, 7});
    CHECK(extract_s_numbers(base_series(BaseSeries::v), 0)[0] == 0);
    for (const auto& s : extract_s_numbers(GElement(), 8)) CHECK(s == 0);
}

TEST_CASE("non-integral coefficients are rejected") {
    CHECK_THROWS_AS(extract_s_numbers(Rational(1, 2) * GElement::f(), 3), NonIntegralCoefficient);
}

TEST_CASE("S-numbers of assembled functions are integers") {
    BaseDescriptor b;
    b.base_type = BaseType::B;
    b.parity = Parity::even;
    b.c = {1, 2, 0};
    b.sp = 2;
    b.labels = {{{2, 0}, {1, 3}}, {{3, 1}}};
    CHECK_NOTHROW(extract_s_numbers(assemble_FB(b), 20));
    b.base_type = BaseType::C;
    b.parity = Parity::odd;
    CHECK_NOTHROW(extract_s_numbers(assemble_FB(b), 20));
}

TEST_CASE("shape table for descriptors without components at the special chain") {
    for (BaseType t : {BaseType::A, BaseType::B, BaseType::C})
        for (Parity p : {Parity::odd, Parity::even}) {
            BaseDescriptor b;
            b.base_type = t;
            b.parity = p;
            b.c = {1, 0, 2};
            b.sp = 2;
            const auto F = assemble_FB(b);
            const auto e = tabulated_shape(b);
            CHECK(degrees(F) == e.degrees);
            if (e.lead_f) CHECK(leading_coefficient(F, Side::f_side) == *e.lead_f);
            if (e.lead_g) CHECK(leading_coefficient(F, Side::g_side) == *e.lead_g);
        }
}

TEST_CASE("type C leading coefficients scale with the special chain") {
    BaseDescriptor b;
    b.c = {0, 2};
    b.sp = 2;
    const auto F = assemble_FB(b);
    const auto d = derived_shape(b);
    CHECK(leading_coefficient(F, Side::f_side) == *d.lead_f);
    CHECK(*d.lead_f == 3 * *tabulated_shape(b).lead_f);
}

TEST_CASE("descriptor JSON round trip") {
    BaseDescriptor b;
    b.base_type = BaseType::B;
    b.parity = Parity::even;
    b.c = {1, 0};
    b.sp = 2;
    b.labels = {{{2, 0}, {1, 2}}};
    const auto j = to_json(b);
    const auto back = descriptor_from_json(j);
    CHECK(to_json(back).dump(2) == j.dump(2));
    CHECK_THROWS_AS(descriptor_from_json(nlohmann::json::parse(R"({"type":"C"})")), InvalidDescriptor);
    CHECK_THROWS_AS(descriptor_from_json(nlohmann::json::parse(R"({"type":"Z","parity":"odd","sp":1,"c":[0],"labels":[]})")),
                    InvalidDescriptor);
}

TEST_CASE("complex reference counts") {
    CHECK(complex_reference(2) == 1);
    CHECK(complex_reference(5) == 256);
    CHECK_THROWS_AS(complex_reference(1), std::domain_error);
    for (const auto& [m, s] : s_numbers_empty(12, Parity::odd).values)
        if (m >= 2) CHECK(abs(s) <= 2 * complex_reference(m));
}

TEST_CASE("asymptotic diagnostics") {
    const auto a = asymptotic_report(s_numbers_empty(63, Parity::odd));
    const double target = 4.0 / (std::numbers::pi * std::numbers::pi);
    CHECK(std::abs(a.corrected_ratio.back().second / target - 1) < 0.01);
    CHECK(std::abs(a.corrected_radius_estimate - std::numbers::pi * std::numbers::pi / 4) < 0.03);
    std::vector<Rational> geo;
    for (int k = 0; k < 20; ++k) geo.push_back(Rational(1) / Rational(Integer(1) << k));
    const auto g = asymptotic_report_from_coefficients(geo);
    CHECK(g.radius_estimate == doctest::Approx(2.0));
    CHECK(g.corrected_ratio.back().second == doctest::Approx(0.5 * 18.0 / 19.0));
    CHECK_THROWS_AS(asymptotic_report(s_numbers_empty(9, Parity::odd)), InsufficientData);
}

TEST_CASE("S-number report JSON is stable") {
    const auto j = to_json(s_numbers_empty(9, Parity::odd));
    CHECK(j.at("values").at(1) == nlohmann::json::array({3, "-2"}));
    CHECK(nlohmann::json::parse(j.dump(2)).dump(2) == j.dump(2));
}
