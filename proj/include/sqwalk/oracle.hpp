#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sqwalk/group.hpp"
#include "sqwalk/walk.hpp"

// Ground-truth side of the library: dense convolution straight from the
// definition, direct norms, subgroup restriction, and a seeded Monte Carlo
// sampler. Nothing here touches the character machinery it is used to check.

namespace sqwalk::oracle {

// A probability as a raw function on the element list.
struct DenseProbability {
    std::vector<double> p;
    int order() const { return static_cast<int>(p.size()); }
};

void validate_probability(const DenseProbability& p);

DenseProbability uniform_probability(int order);
DenseProbability point_mass_at_identity(int order);
DenseProbability dense_from_class(const ClassProbability& cp, const ClassPartition& classes);

// (P * Q)(h) = sum_g P(g) Q(g^-1 h), evaluated with the Cayley table.
DenseProbability convolve(const DenseProbability& p, const DenseProbability& q,
                          const GroupTable& g);

enum class PowerStrategy { Iterated, RepeatedSquaring };

// n-fold convolution power, n >= 1. Both strategies agree to rounding.
DenseProbability convolution_power(const DenseProbability& p, int n, const GroupTable& g,
                                   PowerStrategy strategy = PowerStrategy::Iterated);

// sqrt((1/|G|) sum_g (P(g) - 1/|G|)^2)
double l2_distance_to_uniform(const DenseProbability& p);

// (1/2) sum_g |P(g) - 1/|G||, reported for context only.
double tv_distance_to_uniform(const DenseProbability& p);

// P re-indexed onto the subgroup's own GroupTable (built by re-closing the
// subgroup's elements). Throws SupportEscapesSubgroup if mass lies outside H.
struct RestrictedWalk {
    DenseProbability probability;
    GroupTable subgroup;
    std::vector<int> parent_index; // subgroup element index -> parent element index
};

RestrictedWalk restrict_to_subgroup(const DenseProbability& p, const GroupTable& g,
                                    const std::vector<int>& subgroup_elements);

// Simulates `chains` walks of length n (start at identity, each step
// left-multiplies by a draw from P) and returns endpoint counts per element.
// Deterministic for a fixed seed, independent of the kernel backend.
std::vector<uint64_t> sample_walk_counts(const DenseProbability& p, const GroupTable& g,
                                         int n, uint64_t chains, uint64_t seed);

// Endpoint counts normalized to an empirical distribution.
DenseProbability sample_walk(const DenseProbability& p, const GroupTable& g, int n,
                             uint64_t chains, uint64_t seed);

// Distance of an empirical distribution to uniform, with the multinomial
// sampling bias removed and a delta-method standard error. `exact_distance`
// sharpens the error bar when the true distance is known.
struct EmpiricalL2 {
    double plug_in = 0.0;   // distance of the raw empirical distribution
    double debiased = 0.0;  // sampling-variance-corrected estimate
    double std_error = 0.0; // for the debiased estimate
};

EmpiricalL2 empirical_l2_to_uniform(const std::vector<uint64_t>& counts, uint64_t chains,
                                    std::optional<double> exact_distance = std::nullopt);

} // namespace sqwalk::oracle
