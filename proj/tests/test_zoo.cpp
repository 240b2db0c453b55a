#include "doctest.h"

#include "sqwalk/errors.hpp"
#include "sqwalk/zoo.hpp"

using namespace sqwalk;

TEST_CASE("family orders") {
    CHECK(build_group(parse_group_spec("C1")).table.order == 1);
    CHECK(build_group(parse_group_spec("C2")).table.order == 2);
    CHECK(build_group(parse_group_spec("C8")).table.order == 8);
    CHECK(build_group(parse_group_spec("D3")).table.order == 6);
    CHECK(build_group(parse_group_spec("D6")).table.order == 12);
    CHECK(build_group(parse_group_spec("S2")).table.order == 2);
    CHECK(build_group(parse_group_spec("S4")).table.order == 24);
    CHECK(build_group(parse_group_spec("S5")).table.order == 120);
    CHECK(build_group(parse_group_spec("A3")).table.order == 3);
    CHECK(build_group(parse_group_spec("A4")).table.order == 12);
    CHECK(build_group(parse_group_spec("A5")).table.order == 60);
    CHECK(build_group(parse_group_spec("A6")).table.order == 360);
    CHECK(build_group(parse_group_spec("Q8")).table.order == 8);
    CHECK(build_group(parse_group_spec("C2xC2")).table.order == 4);
    CHECK(build_group(parse_group_spec("C2xC4")).table.order == 8);
    CHECK(build_group(parse_group_spec("C2xC2xC3")).table.order == 12);
}

TEST_CASE("long names and case") {
    CHECK(build_group(parse_group_spec("cyclic:7")).table.order == 7);
    CHECK(build_group(parse_group_spec("dihedral:5")).table.order == 10);
    CHECK(build_group(parse_group_spec("symmetric:3")).table.order == 6);
    CHECK(build_group(parse_group_spec("alternating:4")).table.order == 12);
    CHECK(build_group(parse_group_spec("quaternion8")).table.order == 8);
    CHECK(build_group(parse_group_spec("q8")).table.order == 8);
    CHECK(build_group(parse_group_spec("s3")).table.order == 6);
}

TEST_CASE("canonical names") {
    CHECK(canonical_name(parse_group_spec("C2xC4")) == "C2xC4");
    CHECK(canonical_name(parse_group_spec("quaternion8")) == "Q8");
    CHECK(canonical_name(parse_group_spec("dihedral:4")) == "D4");
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_group_spec(""), Error);
    CHECK_THROWS_AS(parse_group_spec("C0"), Error);
    CHECK_THROWS_AS(parse_group_spec("D2"), Error);
    CHECK_THROWS_AS(parse_group_spec("S9"), Error);
    CHECK_THROWS_AS(parse_group_spec("A9"), Error);
    CHECK_THROWS_AS(parse_group_spec("Z5"), Error);
    CHECK_THROWS_AS(parse_group_spec("C2x"), Error);
    CHECK_THROWS_AS(parse_group_spec("cyclic:"), Error);
    for (const char* bad : {"C0", "S9", "Z5"}) {
        try {
            parse_group_spec(bad);
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Usage);
        }
    }
}

TEST_CASE("quaternion group structure") {
    auto q8 = build_group(parse_group_spec("Q8")).table;
    REQUIRE(q8.order == 8);
    // one element of order 2, six of order 4
    int order2 = 0, order4 = 0;
    for (int e = 1; e < q8.order; ++e) {
        int power = e, k = 1;
        while (power != 0) {
            power = q8.at(power, e);
            ++k;
        }
        if (k == 2)
            ++order2;
        if (k == 4)
            ++order4;
    }
    CHECK(order2 == 1);
    CHECK(order4 == 6);
}

TEST_CASE("direct products act on disjoint points") {
    auto c2c4 = build_group(parse_group_spec("C2xC4"));
    CHECK(c2c4.table.degree() == 6);
    CHECK(c2c4.table.generator_indices.size() == 2);
    // abelian: every pair commutes
    const auto& g = c2c4.table;
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            CHECK(g.at(a, b) == g.at(b, a));
}

TEST_CASE("custom generator specs") {
    auto klein = build_group(custom_spec("(0 1), (2 3)"));
    CHECK(klein.table.order == 4);
    CHECK(canonical_name(custom_spec("(0 1)")) == "<(0 1)>");
}
