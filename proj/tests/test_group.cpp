#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"

#include "sqwalk/errors.hpp"
#include "sqwalk/group.hpp"
#include "sqwalk/zoo.hpp"
#include "support/fixtures.hpp"

using namespace sqwalk;

namespace {

// Closure computed directly on permutations, without any of the table
// machinery, as the ground truth for generate_group.
std::set<std::vector<int>> brute_force_closure(const std::vector<Permutation>& gens) {
    std::set<std::vector<int>> seen;
    int degree = gens.empty() ? 1 : gens[0].degree();
    std::vector<Permutation> frontier{Permutation::identity(degree)};
    seen.insert(frontier[0].images());
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& p : frontier)
            for (const auto& g : gens) {
                Permutation q = p * g;
                if (seen.insert(q.images()).second)
                    next.push_back(q);
            }
        frontier = std::move(next);
    }
    return seen;
}

GroupTable zoo(const std::string& name) {
    return build_group(parse_group_spec(name)).table;
}

} // namespace

TEST_CASE("generate_group basics") {
    auto c2 = generate_group(parse_generators("(0 1)"));
    CHECK(c2.order == 2);
    CHECK(c2.elements[0].is_identity());

    auto s3 = generate_group(parse_generators("(0 1), (0 1 2)"));
    CHECK(s3.order == 6);
    auto truth = brute_force_closure(parse_generators("(0 1), (0 1 2)"));
    CHECK(truth.size() == 6);
    for (const auto& e : s3.elements)
        CHECK(truth.count(e.images()) == 1);

    auto trivial = generate_group({}, kDefaultMaxOrder, 1);
    CHECK(trivial.order == 1);
}

TEST_CASE("generate_group is deterministic") {
    auto a = generate_group(parse_generators("(0 1 2 3), (0 1)"));
    auto b = generate_group(parse_generators("(0 1 2 3), (0 1)"));
    REQUIRE(a.order == b.order);
    for (int i = 0; i < a.order; ++i)
        CHECK(a.elements[i] == b.elements[i]);
    CHECK(a.mul == b.mul);
}

TEST_CASE("generate_group errors") {
    CHECK_THROWS_AS(generate_group(parse_generators("(0 1), (0 1 2)"), 5), OrderCapExceeded);
    std::vector<Permutation> mismatch{Permutation({1, 0}), Permutation({1, 0, 2, 3})};
    CHECK_THROWS_AS(generate_group(mismatch), InvalidPermutation);
}

TEST_CASE("multiplication table matches permutation composition") {
    for (const char* name : {"S3", "Q8", "D4"}) {
        auto g = zoo(name);
        for (int a = 0; a < g.order; ++a)
            for (int b = 0; b < g.order; ++b)
                CHECK(g.elements[g.at(a, b)] == g.elements[a] * g.elements[b]);
    }
}

TEST_CASE("group laws on the zoo") {
    for (const auto& name : fixtures::zoo_names()) {
        CAPTURE(name);
        auto g = zoo(name);
        for (int i = 0; i < g.order; ++i) {
            CHECK(g.at(0, i) == i);
            CHECK(g.at(i, 0) == i);
            CHECK(g.at(i, g.inverse(i)) == 0);
            CHECK(g.at(g.inverse(i), i) == 0);
        }
        // exhaustive associativity (every zoo group is well under 200)
        REQUIRE(g.order <= 200);
        bool associative = true;
        for (int a = 0; a < g.order && associative; ++a)
            for (int b = 0; b < g.order && associative; ++b)
                for (int c = 0; c < g.order; ++c)
                    if (g.at(g.at(a, b), c) != g.at(a, g.at(b, c))) {
                        associative = false;
                        break;
                    }
        CHECK(associative);
    }
}

TEST_CASE("sampled associativity on a larger group") {
    auto s6 = build_group(parse_group_spec("S6")).table; // order 720
    REQUIRE(s6.order == 720);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> pick(0, s6.order - 1);
    for (int trial = 0; trial < 10000; ++trial) {
        int a = pick(rng), b = pick(rng), c = pick(rng);
        CHECK(s6.at(s6.at(a, b), c) == s6.at(a, s6.at(b, c)));
    }
}

TEST_CASE("conjugacy classes") {
    auto c2 = zoo("C2");
    auto c2cls = conjugacy_classes(c2);
    CHECK(c2cls.num_classes == 2);
    CHECK(c2cls.class_sizes == std::vector<int>{1, 1});

    auto s3 = zoo("S3");
    auto s3cls = conjugacy_classes(s3);
    CHECK(s3cls.class_sizes == std::vector<int>{1, 2, 3});

    auto q8 = zoo("Q8");
    auto q8cls = conjugacy_classes(q8);
    CHECK(q8cls.class_sizes == std::vector<int>{1, 1, 2, 2, 2});
}

TEST_CASE("class partition matches brute-force conjugacy") {
    for (const char* name : {"S3", "S4", "Q8", "D5"}) {
        CAPTURE(name);
        auto g = zoo(name);
        auto cls = conjugacy_classes(g);
        CHECK(cls.class_of[0] == 0);
        CHECK(cls.class_sizes[0] == 1);
        int total = 0;
        for (int s : cls.class_sizes)
            total += s;
        CHECK(total == g.order);
        for (int x = 0; x < g.order; ++x)
            for (int y = 0; y < g.order; ++y) {
                bool conjugate = false;
                for (int c = 0; c < g.order && !conjugate; ++c)
                    conjugate = g.at(g.at(g.inverse(c), x), c) == y;
                CHECK(conjugate == (cls.class_of[x] == cls.class_of[y]));
            }
        // representatives are class minima
        for (int c = 0; c < cls.num_classes; ++c) {
            int rep = cls.representatives[c];
            CHECK(cls.class_of[rep] == c);
            for (int x = 0; x < rep; ++x)
                CHECK(cls.class_of[x] != c);
        }
    }
}

TEST_CASE("squaring profile") {
    auto c2 = zoo("C2");
    CHECK(squaring_profile(c2).r == std::vector<int>{2, 0});

    auto s3 = zoo("S3");
    auto profile = squaring_profile(s3);
    auto cls = conjugacy_classes(s3);
    // direct enumeration of h*h as a cross-check
    std::vector<int> direct(s3.order, 0);
    for (int h = 0; h < s3.order; ++h)
        ++direct[s3.at(h, h)];
    CHECK(profile.r == direct);
    CHECK(profile.r[0] == 4);
    for (int e = 1; e < s3.order; ++e) {
        int size = cls.class_sizes[cls.class_of[e]];
        if (size == 2)
            CHECK(profile.r[e] == 1); // the two 3-cycles
        else
            CHECK(profile.r[e] == 0); // transpositions have no square roots
    }
}

TEST_CASE("squaring profile invariants on the zoo") {
    for (const auto& name : fixtures::zoo_names()) {
        CAPTURE(name);
        auto g = zoo(name);
        auto profile = squaring_profile(g);
        auto cls = conjugacy_classes(g);
        long total = 0;
        for (int v : profile.r)
            total += v;
        CHECK(total == g.order);
        CHECK(profile.r[0] > 0); // identity squares to identity
        for (int e = 0; e < g.order; ++e)
            CHECK(profile.r[e] == profile.r[cls.representatives[cls.class_of[e]]]);
    }
}

TEST_CASE("odd order groups have bijective squaring") {
    for (const auto& name : fixtures::odd_zoo_names()) {
        auto g = zoo(name);
        for (int v : squaring_profile(g).r)
            CHECK(v == 1);
    }
}

TEST_CASE("subgroup generated by squares") {
    auto q8 = zoo("Q8");
    auto q8sub = subgroup_generated(q8, squaring_profile(q8).support);
    CHECK(q8sub.size() == 2);

    auto s3 = zoo("S3");
    auto s3sub = subgroup_generated(s3, squaring_profile(s3).support);
    CHECK(s3sub.size() == 3); // the rotation subgroup, not all of S3

    CHECK(subgroup_generated(s3, {0}) == std::vector<int>{0});
}

TEST_CASE("generated subsets are subgroups") {
    auto s4 = zoo("S4");
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> pick(0, s4.order - 1);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<int> seed{pick(rng), pick(rng)};
        auto h = subgroup_generated(s4, seed);
        std::set<int> members(h.begin(), h.end());
        CHECK(members.count(0) == 1);
        for (int a : h) {
            CHECK(members.count(s4.inverse(a)) == 1);
            for (int b : h)
                CHECK(members.count(s4.at(a, b)) == 1);
        }
        CHECK(s4.order % static_cast<int>(h.size()) == 0);
    }
}

TEST_CASE("commutator subgroup") {
    for (const char* name : {"C6", "C2xC4"}) {
        auto g = zoo(name);
        CHECK(commutator_subgroup(g) == std::vector<int>{0});
    }

    auto s3 = zoo("S3");
    auto s3comm = commutator_subgroup(s3);
    CHECK(s3comm.size() == 3);
    CHECK(s3.order / s3comm.size() == 2);

    auto q8 = zoo("Q8");
    auto q8comm = commutator_subgroup(q8);
    CHECK(q8comm.size() == 2);
    CHECK(q8.order / q8comm.size() == 4);
}

TEST_CASE("commutator subgroup is normal") {
    for (const char* name : {"S3", "S4", "D5", "Q8"}) {
        CAPTURE(name);
        auto g = zoo(name);
        auto comm = commutator_subgroup(g);
        std::set<int> members(comm.begin(), comm.end());
        for (int gen : g.generator_indices)
            for (int h : comm)
                CHECK(members.count(g.at(g.at(g.inverse(gen), h), gen)) == 1);
    }
}

TEST_CASE("squares generate a subgroup of 2-power index") {
    for (const auto& name : fixtures::zoo_names()) {
        CAPTURE(name);
        auto g = zoo(name);
        auto g1 = subgroup_generated(g, squaring_profile(g).support);
        int index = g.order / static_cast<int>(g1.size());
        CHECK(g.order % static_cast<int>(g1.size()) == 0);
        while (index % 2 == 0)
            index /= 2;
        CHECK(index == 1);
    }
}
