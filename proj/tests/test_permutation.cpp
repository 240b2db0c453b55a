#include "doctest.h"

#include "sqwalk/errors.hpp"
#include "sqwalk/permutation.hpp"

using namespace sqwalk;

TEST_CASE("cycle parsing") {
    auto gens = parse_generators("(0 1)(2 3), (0 1 2)");
    REQUIRE(gens.size() == 2);
    CHECK(gens[0].degree() == 4);
    CHECK(gens[1].degree() == 4); // padded to the common degree
    CHECK(gens[0](0) == 1);
    CHECK(gens[0](2) == 3);
    CHECK(gens[1](2) == 0);
    CHECK(gens[1](3) == 3);

    CHECK(parse_generators("()").size() == 1);
    CHECK(parse_generators("()")[0].is_identity());
    CHECK(parse_generators("").empty());
    CHECK(parse_generators(" ( 0 1 ) ")[0].cycle_string() == "(0 1)");
    // commas inside a cycle separate points
    CHECK(parse_generators("(0,1,2)")[0].cycle_string() == "(0 1 2)");
}

TEST_CASE("cycle parsing errors") {
    CHECK_THROWS_AS(parse_generators("(0 1"), InvalidPermutation);
    CHECK_THROWS_AS(parse_generators("(0 1)(1 2)"), InvalidPermutation);
    CHECK_THROWS_AS(parse_generators("abc"), InvalidPermutation);
    CHECK_THROWS_AS(parse_generators("(0 99)"), OrderCapExceeded); // above the 64-point limit
    CHECK_THROWS_AS(Permutation({0, 0}), InvalidPermutation);
    CHECK_THROWS_AS(Permutation({0, 5}), InvalidPermutation);
}

TEST_CASE("composition and inverse") {
    auto gens = parse_generators("(0 1 2), (0 1)");
    const auto& rot = gens[0];
    const auto& swap = gens[1];
    CHECK((rot * rot * rot).is_identity());
    CHECK((swap * swap).is_identity());
    CHECK((rot * rot.inverse()).is_identity());
    // (a*b)(x) = a(b(x))
    CHECK((rot * swap)(0) == rot(swap(0)));
    CHECK((rot * swap)(2) == rot(swap(2)));
    CHECK(rot.inverse().cycle_string() == "(0 2 1)");
}

TEST_CASE("cycle string round-trips") {
    for (const char* text : {"(0 1)", "(0 1 2)(3 4)", "(0 5)(1 3 2)", "()"}) {
        auto p = parse_generators(text)[0];
        auto q = parse_generators(p.cycle_string())[0];
        CHECK(p.extended(q.degree()).images() == q.images());
    }
}
