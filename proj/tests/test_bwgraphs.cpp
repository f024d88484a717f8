#include <doctest.h>

#include <set>

#include "ratsign/bwgraphs.hpp"
#include "ratsign/verify.hpp"

using namespace ratsign;

TEST_CASE("real sequences of the fixtures") {
    const auto a = real_sequences(long_sign_fixture());
    CHECK(a.white == std::vector<int>{1, 3, 2, 2, 2, 1});
    CHECK(a.black == std::vector<int>{4, 3, 2, 2, 6});
    const auto b = real_sequences(short_sign_fixture());
    CHECK(b.white == std::vector<int>{3, 4});
    CHECK(b.black == std::vector<int>{2, 2, 3});
    CHECK_NOTHROW(validate(long_sign_fixture()));
    CHECK_NOTHROW(validate(short_sign_fixture()));
}

TEST_CASE("signs of the fixtures") {
    CHECK(sign(long_sign_fixture()) == SignBreakdown{12, 2, 1});
    CHECK(sign(short_sign_fixture()) == SignBreakdown{0, 1, -1});
}

TEST_CASE("first non-symmetric pair") {
    CHECK(nearly_symmetric(short_sign_fixture()));
    const auto p = first_non_symmetric_pair(long_sign_fixture());
    REQUIRE(p.has_value());
    const auto g = long_sign_fixture();
    CHECK(g.color(p->first) == Color::black);
    CHECK(g.degree(p->first) == 4);
    CHECK(g.degree(p->second) == 6);
}

TEST_CASE("minimal graphs of degree two") {
    const auto gs = enumerate({2}, {2});
    CHECK(gs.size() == 2);
    for (const auto& g : gs) {
        CHECK(real_sequences(g) == RealSequences{{2}, {2}});
        CHECK(sign(g) == SignBreakdown{0, 1, -1});
    }
    CHECK(signed_sums({2}, {2}) == SignedSums{-1, -1, 2});
    CHECK(enumerate({1}, {1}).empty());
}

TEST_CASE("signed sums of the 3,2,1,1 / 3,2,2 example") {
    const auto s = signed_sums({3, 2, 1, 1}, {3, 2, 2});
    CHECK(s.white == 2);
    CHECK(s.black == 2);
    CHECK(s.graphs == 8);
}

TEST_CASE("enumerated graphs are valid and distinct") {
    for (int d = 2; d <= 6; ++d)
        for (const auto& w : partitions_of(d))
            for (const auto& b : partitions_of(d)) {
                const auto gs = enumerate(w, b);
                std::set<RealBwGraph> seen(gs.begin(), gs.end());
                CHECK(seen.size() == gs.size());
                for (const auto& g : gs) {
                    CHECK_NOTHROW(validate(g));
                    CHECK(degree_partitions(g) == std::make_pair(w, b));
                    CHECK(edge_count(g) == static_cast<std::size_t>(d));
                }
            }
}

TEST_CASE("flip properties") {
    const auto g = long_sign_fixture();
    const auto p = *first_non_symmetric_pair(g);
    const auto h = flip(g, p.first, p.second);
    CHECK(flip(h, p.first, p.second) == g);
    CHECK(sign(h).sign == -sign(g).sign);
    CHECK_NOTHROW(validate(h));
    CHECK(real_sequences(flip(g, 4, 6)) == real_sequences(g));
}

TEST_CASE("rotation of nearly symmetric graphs") {
    for (int d : {4, 6})
        for (const auto& w : partitions_of(d))
            for (const auto& b : partitions_of(d))
                for (const auto& g : enumerate(w, b)) {
                    if (!nearly_symmetric(g) || !g.white_sided()) continue;
                    const auto r = rotate(g);
                    CHECK_FALSE(r.white_sided());
                    CHECK(sign(r).sign == (rotation_flips_sign(g) ? -1 : 1) * sign(g).sign);
                }
    for (int d : {3, 5})
        for (const auto& w : partitions_of(d))
            for (const auto& b : partitions_of(d))
                for (const auto& g : enumerate(w, b)) {
                    if (!nearly_symmetric(g) || is_reduced(g)) continue;
                    const auto r = rotate(g);
                    CHECK(rotate(r) == g);
                    CHECK(sign(r).sign == -sign(g).sign);
                }
}

TEST_CASE("invariance for small degrees") {
    for (int d = 2; d <= 6; ++d) {
        const auto rep = verify_invariance(d);
        CHECK(rep.failures.empty());
    }
    CHECK(partitions_of(7).size() == 15);
}

TEST_CASE("partition parsing and validation errors") {
    CHECK(parse_partition("2,3,1") == Partition{3, 2, 1});
    CHECK_THROWS_AS(parse_partition("2,,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("0"), std::invalid_argument);
    auto g = short_sign_fixture();
    g.cycle_pos = 9;
    CHECK_THROWS_AS(validate(g), GraphError);
    CHECK_THROWS(enumerate({3}, {2}));
}

TEST_CASE("graph JSON is stable") {
    const auto j = to_json(long_sign_fixture());
    CHECK(nlohmann::json::parse(j.dump(2)).dump(2) == j.dump(2));
}
