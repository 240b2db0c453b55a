#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "sqwalk/character.hpp"
#include "sqwalk/group.hpp"

namespace sqwalk {

// A probability constant on conjugacy classes, stored as the per-element
// value on each class. sum(class_sizes[c] * per_class[c]) == 1.
struct ClassProbability {
    std::vector<double> per_class;
};

// Throws (Usage) if entries are negative or the total mass is off.
void validate_class_probability(const ClassProbability& p, const ClassPartition& classes);

// Step distribution of the walk that applies a uniformly chosen element
// twice: per-element value r(g)/|G| on each class.
ClassProbability square_walk_probability(const SquaringProfile& profile,
                                         const ClassPartition& classes);

// Step distribution induced by an arbitrary self-map f of the group:
// P(g) = |f^-1(f(g))| / |G|. Throws NotClassFunction (with the offending
// class index) when the preimage-count function varies within a class.
ClassProbability induced_walk_probability(const GroupTable& g, const ClassPartition& classes,
                                          const std::vector<int>& f);

// Spectral data of the convolution operator of a class probability:
// for each nonprincipal character, the expansion coefficient m, the
// eigenvalue b = |G| m / d, and the degree d. fs is filled for the square
// walk only, where b snaps to {0, +1/d, -1/d}.
struct WalkSpectrum {
    std::vector<std::complex<double>> m;
    std::vector<std::complex<double>> b;
    std::vector<int> degrees;
    std::vector<int> fs;       // empty unless built by square_walk_spectrum
    std::vector<int> rows;     // character-table row per entry
};

// Expands P over the character basis and verifies the expansion reproduces P
// (max class residual < 1e-10, else ReconstructionFailure).
WalkSpectrum fourier_coefficients(const ClassProbability& p, const CharacterTable& table,
                                  const ClassPartition& classes);

// fourier_coefficients of the square walk with the eigenvalues snapped to the
// indicator lattice: |G| m must land within 1e-8 of {-1, 0, +1}.
WalkSpectrum square_walk_spectrum(const SquaringProfile& profile, const ClassPartition& classes,
                                  const CharacterTable& table);

// The signed class function P^(n) - U, evaluated on every class.
std::vector<double> deviation(const WalkSpectrum& spectrum, const CharacterTable& table, int n);

// || P^(n) - U || = sqrt(sum_j d_j^2 |b_j|^(2n)) / |G|.
double exact_l2_distance(const WalkSpectrum& spectrum, int order, int n);

// Square-walk distance straight from the real nonprincipal characters:
// sqrt(sum over real nonprincipal chi of d_chi^(2(1-n))) / |G|.
double theorem1_distance(const CharacterTable& table, int n);

// Leading behaviour of the square-walk distance as n grows.
struct AsymptoticRate {
    bool exactly_uniform = false; // no real nonprincipal characters: distance is 0 for n >= 1
    int d = 0;                    // minimum degree among real nonprincipal characters
    int t = 0;                    // how many have that degree
    double leading_coefficient = 0.0; // sqrt(t) * d / |G|
    double base = 0.0;                // 1/d
    bool converges = true;
    double limit = 0.0;               // sqrt(t)/|G| when d == 1
};

AsymptoticRate asymptotic_rate(const CharacterTable& table);

// The four equivalent non-convergence predicates, each computed by its own
// route and cross-checked (EquivalenceViolation if they ever disagree):
//   a) the square walk does not converge to uniform on G
//   b) some nonprincipal linear character is real
//   c) the squares generate a proper subgroup
//   d) |G / commutator subgroup| is even
struct ConvergenceReport {
    bool predicate_a = false;
    bool predicate_b = false;
    bool predicate_c = false;
    bool predicate_d = false;
    std::optional<int> min_real_degree; // d of AsymptoticRate, when defined
    int multiplicity = 0;               // t
    long g1_order = 0;                  // order of <squares>
};

ConvergenceReport convergence_report(const GroupTable& g, const ClassPartition& classes,
                                     const CharacterTable& table, const SquaringProfile& profile);

// The walk always converges on the subgroup generated by the squares; the
// witness is that the identity lies in the support of the step distribution.
struct G1Report {
    bool converges = false;
    bool identity_in_support = false;
    long g1_order = 0;
};

G1Report converges_on_g1(const GroupTable& g, const SquaringProfile& profile);

} // namespace sqwalk
