#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "spa/pairing.hpp"

using namespace spa;

namespace {

// Independent membership oracle for the unarisation on the second
// component: n = pair(x, y) is reachable exactly from whatever its y-chain
// descends to, because the second component of unpair strictly decreases
// until it hits a fixed point (1 or 2).
std::int64_t u2_chain_endpoint(std::int64_t n) {
    while (n != 1 && n != 2) n = unpair_value(n).second;
    return n;
}

}  // namespace

TEST_CASE("pair_value on the defining fixed points and near values") {
    CHECK(pair_value(1, 1) == 1);
    CHECK(pair_value(1, 2) == 2);
    CHECK(pair_value(2, 1) == 3);
    CHECK(pair_value(2, 2) == 5);
    CHECK_THROWS_AS(pair_value(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(pair_value(1, 0), std::invalid_argument);
}

TEST_CASE("unpair_value inverts pair_value") {
    CHECK(unpair_value(1) == std::pair<std::int64_t, std::int64_t>{1, 1});
    CHECK(unpair_value(3) == std::pair<std::int64_t, std::int64_t>{2, 1});
    CHECK(unpair_value(5) == std::pair<std::int64_t, std::int64_t>{2, 2});
    CHECK_THROWS_AS(unpair_value(0), std::invalid_argument);
}

TEST_CASE("pair and unpair are mutually inverse up to 10^4") {
    for (std::int64_t n = 1; n <= 10'000; ++n) {
        auto [x, y] = unpair_value(n);
        CHECK(x >= 1);
        CHECK(y >= 1);
        CHECK(pair_value(x, y) == n);
    }
    for (std::int64_t x = 1; x <= 141; ++x) {
        for (std::int64_t y = 1; pair_value(x, y) <= 10'000; ++y) {
            auto inv = unpair_value(pair_value(x, y));
            CHECK(inv.first == x);
            CHECK(inv.second == y);
        }
    }
}

TEST_CASE("the pairing is monotone in both arguments") {
    for (std::int64_t n = 1; n <= 10'000; ++n) {
        auto [x, y] = unpair_value(n);
        CHECK(n >= x);
        CHECK(n >= y);
    }
}

TEST_CASE("overflow is reported, never wrapped") {
    const std::int64_t big = std::int64_t{1} << 32;
    CHECK_THROWS_AS(pair_value(big, big), std::overflow_error);
}

TEST_CASE("unary_op freezes the right component") {
    UnarisedAlgebra u2{Unarisation::U2, 100};
    UnarisedAlgebra u1{Unarisation::U1, 100};
    CHECK(unary_op(u2, 2, 1) == pair_value(2, 1));
    CHECK(unary_op(u1, 2, 1) == pair_value(1, 2));
    CHECK_THROWS_AS(unary_op(u2, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(unary_op(u2, 101, 1), std::invalid_argument);
}

TEST_CASE("orbits of the second-component unarisation") {
    UnarisedAlgebra u2_16{Unarisation::U2, 16};
    auto orbit1 = orbit(u2_16, 1, 16);
    // Every member's chain descends to the seed; checked against the
    // independent unpair-chain oracle.
    const std::vector<std::int64_t> expected1{1, 3, 4, 6, 7, 8, 10, 12, 13, 15, 16};
    CHECK(orbit1.members == expected1);
    for (std::int64_t n = 1; n <= 16; ++n) {
        const bool in_orbit =
            std::find(orbit1.members.begin(), orbit1.members.end(), n) != orbit1.members.end();
        CHECK(in_orbit == (u2_chain_endpoint(n) == 1));
    }

    UnarisedAlgebra u2_17{Unarisation::U2, 17};
    auto orbit2 = orbit(u2_17, 2, 17);
    CHECK(orbit2.members == std::vector<std::int64_t>{2, 5, 9, 11, 14, 17});
    for (std::int64_t n = 1; n <= 17; ++n) {
        const bool in_orbit =
            std::find(orbit2.members.begin(), orbit2.members.end(), n) != orbit2.members.end();
        CHECK(in_orbit == (u2_chain_endpoint(n) == 2));
    }
}

TEST_CASE("the first-component unarisation is generated by 1") {
    UnarisedAlgebra u1{Unarisation::U1, 20};
    auto report = orbit(u1, 1, 20);
    std::vector<std::int64_t> all;
    for (std::int64_t n = 1; n <= 20; ++n) all.push_back(n);
    CHECK(report.members == all);
}

TEST_CASE("orbit preconditions") {
    UnarisedAlgebra u2{Unarisation::U2, 10};
    CHECK_THROWS_AS(orbit(u2, 0, 10), std::invalid_argument);
    CHECK_THROWS_AS(orbit(u2, 11, 10), std::invalid_argument);
    CHECK_THROWS_AS(orbit(u2, 1, 11), std::invalid_argument);  // truncation too small
}

TEST_CASE("decompose_pairing verifies the partition") {
    auto u2 = decompose_pairing(Unarisation::U2, 17);
    CHECK(u2.orbits.size() == 2);
    CHECK(u2.disjoint);
    CHECK(u2.covers);
    CHECK(u2.cycles_verified);
    CHECK(u2.verified());
    CHECK(u2.cycle_relations ==
          std::vector<std::string>{"op_1(1) = 1", "op_1(2) = 2"});

    auto u1 = decompose_pairing(Unarisation::U1, 17);
    CHECK(u1.orbits.size() == 1);
    CHECK(u1.verified());
    CHECK(u1.cycle_relations == std::vector<std::string>{"op_1(1) = 1"});

    auto tiny = decompose_pairing(Unarisation::U2, 2);
    REQUIRE(tiny.orbits.size() == 2);
    CHECK(tiny.orbits[0].members == std::vector<std::int64_t>{1});
    CHECK(tiny.orbits[1].members == std::vector<std::int64_t>{2});
    CHECK(tiny.verified());
}

TEST_CASE("disjointness and cover hold up to 1000") {
    auto report = decompose_pairing(Unarisation::U2, 1000);
    CHECK(report.verified());
    std::size_t total = 0;
    for (const auto& orb : report.orbits) total += orb.members.size();
    CHECK(total == 1000);
}

TEST_CASE("unarised operations are injective with disjoint images") {
    const std::int64_t N = 300;
    UnarisedAlgebra u2{Unarisation::U2, N};
    std::map<std::int64_t, std::pair<std::int64_t, std::int64_t>> seen;
    for (std::int64_t a = 1; a <= N; ++a) {
        for (std::int64_t x = 1; x <= N; ++x) {
            const std::int64_t y = unary_op(u2, a, x);
            if (y > N) break;
            auto [it, inserted] = seen.emplace(y, std::make_pair(a, x));
            CHECK(inserted);  // no collisions within or across operations
        }
    }
}

TEST_CASE("partition report text") {
    auto tiny = decompose_pairing(Unarisation::U2, 5);
    const std::string text = tiny.to_text();
    CHECK(text.find("orbit of 1: 1, 3, 4\n") != std::string::npos);
    CHECK(text.find("orbit of 2: 2, 5\n") != std::string::npos);
    CHECK(text.find("disjoint: yes") != std::string::npos);
    CHECK(text.find("covers [1, 5]: yes") != std::string::npos);
    CHECK(text.find("verified: yes") != std::string::npos);
}
