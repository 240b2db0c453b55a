#include <cmath>
#include <random>

#include "doctest.h"

#include "sqwalk/errors.hpp"
#include "sqwalk/oracle.hpp"
#include "sqwalk/zoo.hpp"
#include "support/fixtures.hpp"

using namespace sqwalk;
using oracle::DenseProbability;

namespace {

DenseProbability random_probability(int order, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    DenseProbability p;
    p.p.resize(order);
    double total = 0.0;
    for (double& v : p.p) {
        v = unit(rng);
        total += v;
    }
    for (double& v : p.p)
        v /= total;
    return p;
}

} // namespace

TEST_CASE("convolution identities") {
    const auto& s4 = fixtures::analysis("S4").group.table;
    std::mt19937_64 rng(3);
    auto q = random_probability(s4.order, rng);

    auto delta_conv = oracle::convolve(oracle::point_mass_at_identity(s4.order), q, s4);
    for (int e = 0; e < s4.order; ++e)
        CHECK(delta_conv.p[e] == doctest::Approx(q.p[e]).epsilon(1e-13));

    auto uniform_conv = oracle::convolve(oracle::uniform_probability(s4.order), q, s4);
    for (int e = 0; e < s4.order; ++e)
        CHECK(uniform_conv.p[e] == doctest::Approx(1.0 / s4.order).epsilon(1e-12));

    double mass = 0.0;
    auto pq = oracle::convolve(q, q, s4);
    for (double v : pq.p)
        mass += v;
    CHECK(std::abs(mass - 1.0) < 1e-10);
}

TEST_CASE("convolution is associative") {
    for (const char* name : {"S4", "D5", "Q8"}) {
        CAPTURE(name);
        const auto& g = fixtures::analysis(name).group.table;
        std::mt19937_64 rng(std::hash<std::string>{}(name) + 1);
        auto p = random_probability(g.order, rng);
        auto q = random_probability(g.order, rng);
        auto r = random_probability(g.order, rng);
        auto left = oracle::convolve(oracle::convolve(p, q, g), r, g);
        auto right = oracle::convolve(p, oracle::convolve(q, r, g), g);
        for (int e = 0; e < g.order; ++e)
            CHECK(std::abs(left.p[e] - right.p[e]) < 1e-10);
    }
}

TEST_CASE("convolution powers") {
    const auto& a4 = fixtures::analysis("A4");
    auto p = oracle::dense_from_class(a4.step, a4.classes);

    auto one = oracle::convolution_power(p, 1, a4.group.table);
    for (int e = 0; e < a4.group.table.order; ++e)
        CHECK(one.p[e] == p.p[e]);

    for (int n : {2, 3, 7, 8}) {
        auto iterated = oracle::convolution_power(p, n, a4.group.table,
                                                  oracle::PowerStrategy::Iterated);
        auto squared = oracle::convolution_power(p, n, a4.group.table,
                                                 oracle::PowerStrategy::RepeatedSquaring);
        for (int e = 0; e < a4.group.table.order; ++e)
            CHECK(std::abs(iterated.p[e] - squared.p[e]) < 1e-10);
    }

    // distance after three steps agrees with the closed form
    auto three = oracle::convolution_power(p, 3, a4.group.table);
    CHECK(std::abs(oracle::l2_distance_to_uniform(three) - std::pow(3.0, -2) / 12.0) < 1e-9);

    CHECK_THROWS_AS(oracle::convolution_power(p, 0, a4.group.table), Error);
}

TEST_CASE("convolving class probabilities stays class-constant") {
    const auto& s4 = fixtures::analysis("S4");
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    ClassProbability cp;
    cp.per_class.resize(s4.classes.num_classes);
    double total = 0.0;
    for (int c = 0; c < s4.classes.num_classes; ++c) {
        cp.per_class[c] = unit(rng);
        total += s4.classes.class_sizes[c] * cp.per_class[c];
    }
    for (double& v : cp.per_class)
        v /= total;
    auto dense = oracle::dense_from_class(cp, s4.classes);
    auto conv = oracle::convolve(dense, dense, s4.group.table);
    for (int e = 0; e < s4.group.table.order; ++e)
        CHECK(std::abs(conv.p[e] -
                       conv.p[s4.classes.representatives[s4.classes.class_of[e]]]) < 1e-12);
}

TEST_CASE("distances to uniform") {
    CHECK(oracle::l2_distance_to_uniform(oracle::uniform_probability(24)) == 0.0);
    CHECK(oracle::tv_distance_to_uniform(oracle::uniform_probability(24)) == 0.0);

    // C2 point mass: sqrt((1/2)(1/4 + 1/4)) = 1/2
    CHECK(oracle::l2_distance_to_uniform(oracle::point_mass_at_identity(2)) ==
          doctest::Approx(0.5).epsilon(1e-14));

    const auto& s3 = fixtures::analysis("S3");
    auto p = oracle::dense_from_class(s3.step, s3.classes);
    CHECK(oracle::l2_distance_to_uniform(p) ==
          doctest::Approx(std::sqrt(2.0) / 6.0).epsilon(1e-13));
}

TEST_CASE("restriction to a subgroup") {
    // Q8: enumerate squares by hand before pinning the restricted values
    const auto& q8 = fixtures::analysis("Q8");
    const auto& g = q8.group.table;
    std::vector<int> rcount(g.order, 0);
    for (int h = 0; h < g.order; ++h)
        ++rcount[g.at(h, h)];
    CHECK(rcount[0] == 2); // identity and the central involution square to 1
    auto g1 = subgroup_generated(g, q8.profile.support);
    REQUIRE(g1.size() == 2);
    CHECK(rcount[g1[1]] == 6); // the six non-central elements square to -1

    auto dense = oracle::dense_from_class(q8.step, q8.classes);
    auto restricted = oracle::restrict_to_subgroup(dense, g, g1);
    REQUIRE(restricted.subgroup.order == 2);
    CHECK(restricted.probability.p[0] == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(restricted.probability.p[1] == doctest::Approx(0.75).epsilon(1e-14));

    // S3 restricted to the rotation subgroup: (4/6, 1/6, 1/6)
    const auto& s3 = fixtures::analysis("S3");
    auto s3g1 = subgroup_generated(s3.group.table, s3.profile.support);
    auto s3r = oracle::restrict_to_subgroup(oracle::dense_from_class(s3.step, s3.classes),
                                            s3.group.table, s3g1);
    REQUIRE(s3r.subgroup.order == 3);
    CHECK(s3r.probability.p[0] == doctest::Approx(4.0 / 6.0).epsilon(1e-14));
    CHECK(s3r.probability.p[1] == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    CHECK(s3r.probability.p[2] == doctest::Approx(1.0 / 6.0).epsilon(1e-14));

    // the point mass restricted to the trivial subgroup
    auto trivial = oracle::restrict_to_subgroup(oracle::point_mass_at_identity(s3.group.table.order),
                                                s3.group.table, {0});
    CHECK(trivial.subgroup.order == 1);
    CHECK(trivial.probability.p == std::vector<double>{1.0});

    // mass outside the subgroup is rejected
    CHECK_THROWS_AS(oracle::restrict_to_subgroup(
                        oracle::dense_from_class(s3.step, s3.classes), s3.group.table, {0}),
                    SupportEscapesSubgroup);
}

TEST_CASE("sampler on a deterministic walk") {
    // the C2 square walk is the point mass at the identity
    const auto& c2 = fixtures::analysis("C2");
    auto p = oracle::dense_from_class(c2.step, c2.classes);
    auto counts = oracle::sample_walk_counts(p, c2.group.table, 5, 10000, 42);
    CHECK(counts[0] == 10000);
    CHECK(counts[1] == 0);

    auto empirical = oracle::sample_walk(p, c2.group.table, 5, 10000, 42);
    CHECK(empirical.p[0] == 1.0);
}

TEST_CASE("sampler reproducibility") {
    const auto& a4 = fixtures::analysis("A4");
    auto p = oracle::dense_from_class(a4.step, a4.classes);
    auto c1 = oracle::sample_walk_counts(p, a4.group.table, 4, 5000, 7);
    auto c2 = oracle::sample_walk_counts(p, a4.group.table, 4, 5000, 7);
    CHECK(c1 == c2);
    auto c3 = oracle::sample_walk_counts(p, a4.group.table, 4, 5000, 8);
    CHECK(c1 != c3);
}

TEST_CASE("sampler error shrinks with more chains") {
    const auto& s3 = fixtures::analysis("S3");
    auto p = oracle::dense_from_class(s3.step, s3.classes);
    auto exact = oracle::convolution_power(p, 3, s3.group.table);

    auto mean_error = [&](uint64_t chains) {
        double total = 0.0;
        for (uint64_t seed = 100; seed < 105; ++seed) {
            auto empirical = oracle::sample_walk(p, s3.group.table, 3, chains, seed);
            double sq = 0.0;
            for (int e = 0; e < s3.group.table.order; ++e) {
                double d = empirical.p[e] - exact.p[e];
                sq += d * d;
            }
            total += std::sqrt(sq / s3.group.table.order);
        }
        return total / 5.0;
    };
    CHECK(mean_error(4000) < mean_error(2000));
}

TEST_CASE("empirical distance statistics") {
    // exact multiples of uniform: zero distance, zero-ish corrected estimate
    std::vector<uint64_t> flat(8, 1000);
    auto stats = oracle::empirical_l2_to_uniform(flat, 8000);
    CHECK(stats.plug_in == 0.0);
    CHECK(stats.debiased == 0.0);

    const auto& a4 = fixtures::analysis("A4");
    auto p = oracle::dense_from_class(a4.step, a4.classes);
    auto counts = oracle::sample_walk_counts(p, a4.group.table, 6, 200000, 5);
    double exact = theorem1_distance(a4.table, 6);
    auto est = oracle::empirical_l2_to_uniform(counts, 200000, exact);
    CHECK(est.std_error > 0.0);
    CHECK(std::abs(est.debiased - exact) < 4.0 * est.std_error);
    // the raw plug-in estimate carries the multinomial noise floor
    CHECK(est.plug_in >= est.debiased);
}
