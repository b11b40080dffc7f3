#include <catch2/catch_amalgamated.hpp>

#include "rostlat/tits.hpp"

using namespace rostlat;

TEST_CASE("system type parsing") {
    CHECK(parse_system_type("E7") == SystemType{Family::E, 7});
    CHECK(parse_system_type("A1") == SystemType{Family::A, 1});
    CHECK(parse_system_type("D64") == SystemType{Family::D, 64});

    CHECK_THROWS_AS(parse_system_type("H3"), ParseError);
    CHECK_THROWS_AS(parse_system_type("E"), ParseError);
    CHECK_THROWS_AS(parse_system_type("A0"), ParseError);
    CHECK_THROWS_AS(parse_system_type("A65"), ParseError);
    CHECK_THROWS_AS(parse_system_type("A1x"), ParseError);
    CHECK_THROWS_AS(parse_system_type("E9"), ParseError);
    CHECK_THROWS_AS(parse_system_type("a7"), ParseError);
}

TEST_CASE("tits index parsing and formatting") {
    TitsIndex idx = parse_tits_index("E7 inner circled=1,3,4,6");
    CHECK(idx.type == SystemType{Family::E, 7});
    CHECK(idx.form == FormKind::Inner);
    CHECK(idx.circled == std::set<int>{1, 3, 4, 6});
    CHECK(format_tits_index(idx) == "E7 inner circled=1,3,4,6");

    // form tag and circled list are optional; inner is the default
    CHECK(parse_tits_index("D4").form == FormKind::Inner);
    CHECK(parse_tits_index("D4").circled.empty());
    CHECK(parse_tits_index("D4 outer3").form == FormKind::Outer3);
    CHECK(parse_tits_index("D4 outer6").form == FormKind::Outer6);
    CHECK(parse_tits_index("A5 outer2 circled=1,5").circled == std::set<int>{1, 5});
    CHECK(parse_tits_index("E6 outer2").form == FormKind::Outer2);
    CHECK(parse_tits_index("  B3   circled=1  ").circled == std::set<int>{1});
    CHECK(parse_tits_index("C4 circled=").circled.empty());
    CHECK(parse_tits_index("C4 circled=4,2,4").circled == std::set<int>{2, 4});

    CHECK_THROWS_AS(parse_tits_index(""), ParseError);
    CHECK_THROWS_AS(parse_tits_index("E7 sideways"), ParseError);
    CHECK_THROWS_AS(parse_tits_index("E7 circled=0"), ParseError);
    CHECK_THROWS_AS(parse_tits_index("E7 circled=8"), ParseError);
    CHECK_THROWS_AS(parse_tits_index("E7 circled=1,x"), ParseError);
    CHECK_THROWS_AS(parse_tits_index("E7 inner circled=7 extra"), ParseError);
    CHECK_THROWS_AS(parse_tits_index("C4 outer2"), ParseError);
    CHECK_THROWS_AS(parse_tits_index("D5 outer3"), ParseError);
    CHECK_THROWS_AS(parse_tits_index("A2 outer6"), ParseError);
}

TEST_CASE("circling condition against the root-lattice vertices") {
    RootSystem e7({Family::E, 7});
    CHECK(check_condition(e7, parse_tits_index("E7 circled=1,3,4,6")));
    CHECK(check_condition(e7, parse_tits_index("E7 circled=1,2,3,4,6")));
    CHECK_FALSE(check_condition(e7, parse_tits_index("E7 circled=1,3,4")));
    CHECK(condition_missing(e7, parse_tits_index("E7 circled=1,3")) == std::set<int>{4, 6});
    CHECK(condition_missing(e7, parse_tits_index("E7")) == std::set<int>{1, 3, 4, 6});

    RootSystem a5({Family::A, 5});
    CHECK(check_condition(a5, parse_tits_index("A5"))); // empty Delta_r
}

TEST_CASE("rost multipliers by root length") {
    RootSystem c5({Family::C, 5});
    CHECK(rost_multiplier(c5, 1) == 2); // short
    CHECK(rost_multiplier(c5, 3) == 2);
    CHECK(rost_multiplier(c5, 5) == 1); // long
    CHECK_THROWS_AS(rost_multiplier(c5, 2), Error); // inside Delta_r
    CHECK_THROWS_AS(rost_multiplier(c5, 0), Error);
    CHECK_THROWS_AS(rost_multiplier(c5, 6), Error);

    RootSystem b4({Family::B, 4});
    CHECK(rost_multiplier(b4, 4) == 2); // the short end of B

    RootSystem e7({Family::E, 7});
    CHECK(rost_multiplier(e7, 7) == 1); // simply laced

    RootSystem a3({Family::A, 3});
    for (int v = 1; v <= 3; ++v) CHECK(rost_multiplier(a3, v) == 1);
}

TEST_CASE("subgroup components for the canonical indices") {
    RootSystem e7({Family::E, 7});
    GPrimeDecomposition d = g_prime(e7, parse_tits_index("E7 circled=1,3,4,6"));
    REQUIRE(d.components.size() == 3);
    CHECK(d.components[0].vertices == std::vector<int>{2});
    CHECK(d.components[1].vertices == std::vector<int>{5});
    CHECK(d.components[2].vertices == std::vector<int>{7});
    for (const GPrimeComponent& c : d.components) {
        CHECK(c.type == SystemType{Family::A, 1});
        CHECK(c.multiplier == 1);
    }
    // the single center generator restricts to (-1, -1, -1)
    REQUIRE(d.center_restriction.size() == 1);
    for (const auto& slice : d.center_restriction[0]) CHECK(slice == std::vector<Int>{1});

    CHECK_THROWS_AS(g_prime(e7, parse_tits_index("E7 circled=1")), ConditionViolated);
}

TEST_CASE("subgroup components of the symplectic series") {
    RootSystem c5({Family::C, 5});
    GPrimeDecomposition d = g_prime(c5, parse_tits_index("C5 circled=2,4"));
    REQUIRE(d.components.size() == 3);
    CHECK(d.components[0].vertices == std::vector<int>{1});
    CHECK(d.components[1].vertices == std::vector<int>{3});
    CHECK(d.components[2].vertices == std::vector<int>{5});
    CHECK(d.multipliers() == std::vector<int>{2, 2, 1});
}

TEST_CASE("center restriction to the even orthogonal fork") {
    RootSystem d6({Family::D, 6});
    GPrimeDecomposition d = g_prime(d6, parse_tits_index("D6 circled=2,4"));
    REQUIRE(d.components.size() == 4); // vertices 1, 3, 5, 6
    REQUIRE(d.center_restriction.size() == 2);
    auto slices = [&](std::size_t g) {
        std::vector<Int> v;
        for (const auto& s : d.center_restriction[g]) {
            REQUIRE(s.size() == 1);
            v.push_back(s[0]);
        }
        return v;
    };
    CHECK(slices(0) == std::vector<Int>{1, 1, 0, 1});
    CHECK(slices(1) == std::vector<Int>{1, 1, 1, 0});
}

TEST_CASE("multi-vertex components come out as ordered paths") {
    // D5 with only vertex 2 circled: components {1} and {3,4,5}, the latter
    // a path through the fork vertex 3 with ends 4 and 5
    RootSystem d5({Family::D, 5});
    GPrimeDecomposition d = g_prime(d5, parse_tits_index("D5 circled=2"));
    REQUIRE(d.components.size() == 2);
    CHECK(d.components[0].vertices == std::vector<int>{1});
    CHECK(d.components[1].vertices == std::vector<int>{3, 4, 5});
    CHECK(d.components[1].type == SystemType{Family::A, 3});
    CHECK(d.components[1].path == std::vector<int>{4, 3, 5});

    // E6 with 2 and 4 circled: two 2-vertex paths
    RootSystem e6({Family::E, 6});
    GPrimeDecomposition e = g_prime(e6, parse_tits_index("E6 circled=2,4"));
    REQUIRE(e.components.size() == 2);
    CHECK(e.components[0].path == std::vector<int>{1, 3});
    CHECK(e.components[1].path == std::vector<int>{5, 6});

    // circling all of Delta_r in B3 leaves the short A1 at the end
    RootSystem b3({Family::B, 3});
    GPrimeDecomposition b = g_prime(b3, parse_tits_index("B3 circled=1,2"));
    REQUIRE(b.components.size() == 1);
    CHECK(b.components[0].vertices == std::vector<int>{3});
    CHECK(b.components[0].multiplier == 2);

    // circling past Delta_r can merge the D5 tail into one A2 component
    GPrimeDecomposition d2 = g_prime(d5, parse_tits_index("D5 circled=2,4"));
    REQUIRE(d2.components.size() == 2);
    CHECK(d2.components[1].vertices == std::vector<int>{3, 5});
    CHECK(d2.components[1].type == SystemType{Family::A, 2});
}

TEST_CASE("the circling condition is enforced before decomposition") {
    RootSystem f4({Family::F, 4});
    CHECK_THROWS_AS(g_prime(f4, parse_tits_index("F4 circled=1,4")), ConditionViolated);
    RootSystem d6({Family::D, 6});
    CHECK_THROWS_AS(g_prime(d6, parse_tits_index("D6 circled=2")), ConditionViolated);
    // D4 minus its center vertex leaves three isolated vertices
    RootSystem d4({Family::D, 4});
    CHECK(g_prime(d4, parse_tits_index("D4 circled=2")).components.size() == 3);
}
