#include "sqwalk/walk.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sqwalk/errors.hpp"

namespace sqwalk {

namespace {

using Complex = std::complex<double>;

template <typename T> T pow_int(T base, int exponent) {
    T acc(1.0);
    T b = base;
    for (int e = exponent; e > 0; e >>= 1) {
        if (e & 1)
            acc *= b;
        b *= b;
    }
    return acc;
}

void require_positive_steps(int n) {
    if (n < 1)
        throw Error(ErrorKind::Usage, "the step count n must be at least 1");
}

// Per-class probability from a class-constant element count table; complains
// (with the class index) when the counts are not class-constant.
ClassProbability class_probability_from_counts(const std::vector<int>& counts,
                                               const ClassPartition& classes) {
    const int order = static_cast<int>(counts.size());
    for (int e = 0; e < order; ++e) {
        int c = classes.class_of[e];
        if (counts[e] != counts[classes.representatives[c]])
            throw NotClassFunction(c, "value varies within conjugacy class " + std::to_string(c));
    }
    ClassProbability p;
    p.per_class.resize(classes.num_classes);
    for (int c = 0; c < classes.num_classes; ++c)
        p.per_class[c] =
            static_cast<double>(counts[classes.representatives[c]]) / static_cast<double>(order);
    return p;
}

} // namespace

void validate_class_probability(const ClassProbability& p, const ClassPartition& classes) {
    if (static_cast<int>(p.per_class.size()) != classes.num_classes)
        throw Error(ErrorKind::Usage, "class probability has the wrong number of classes");
    double total = 0.0;
    for (int c = 0; c < classes.num_classes; ++c) {
        if (p.per_class[c] < 0.0)
            throw Error(ErrorKind::Usage, "class probability has a negative entry");
        total += classes.class_sizes[c] * p.per_class[c];
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw Error(ErrorKind::Usage,
                    "class probability mass is " + std::to_string(total) + ", expected 1");
}

ClassProbability square_walk_probability(const SquaringProfile& profile,
                                         const ClassPartition& classes) {
    return class_probability_from_counts(profile.r, classes);
}

ClassProbability induced_walk_probability(const GroupTable& g, const ClassPartition& classes,
                                          const std::vector<int>& f) {
    if (static_cast<int>(f.size()) != g.order)
        throw Error(ErrorKind::Usage, "the map must be defined on every element");
    std::vector<int> preimages(g.order, 0);
    for (int e = 0; e < g.order; ++e) {
        if (f[e] < 0 || f[e] >= g.order)
            throw Error(ErrorKind::Usage, "the map sends an element outside the group");
        ++preimages[f[e]];
    }
    return class_probability_from_counts(preimages, classes);
}

WalkSpectrum fourier_coefficients(const ClassProbability& p, const CharacterTable& table,
                                  const ClassPartition& classes) {
    validate_class_probability(p, classes);
    if (table.num_classes != classes.num_classes)
        throw Error(ErrorKind::Usage, "character table and class partition disagree");

    const int s = table.num_classes;
    const double order = table.group_order;

    WalkSpectrum spectrum;
    for (int row = 0; row < s; ++row) {
        if (row == table.principal_index)
            continue;
        Complex m = 0.0;
        for (int c = 0; c < s; ++c)
            m += static_cast<double>(classes.class_sizes[c]) * p.per_class[c] *
                 std::conj(table.value(row, c));
        m /= order;
        spectrum.m.push_back(m);
        spectrum.b.push_back(order * m / static_cast<double>(table.degrees[row]));
        spectrum.degrees.push_back(table.degrees[row]);
        spectrum.rows.push_back(row);
    }

    // The expansion must reproduce the probability it came from.
    double resid = 0.0;
    for (int c = 0; c < s; ++c) {
        Complex recon = 1.0 / order;
        for (std::size_t j = 0; j < spectrum.m.size(); ++j)
            recon += spectrum.m[j] * table.value(spectrum.rows[j], c);
        resid = std::max(resid, std::abs(recon - p.per_class[c]));
    }
    if (resid > 1e-10)
        throw ReconstructionFailure("character expansion misses the probability by " +
                                    std::to_string(resid));
    return spectrum;
}

WalkSpectrum square_walk_spectrum(const SquaringProfile& profile, const ClassPartition& classes,
                                  const CharacterTable& table) {
    WalkSpectrum spectrum =
        fourier_coefficients(square_walk_probability(profile, classes), table, classes);
    const double order = table.group_order;
    spectrum.fs.resize(spectrum.m.size());
    for (std::size_t j = 0; j < spectrum.m.size(); ++j) {
        Complex scaled = order * spectrum.m[j];
        long nearest = std::lround(scaled.real());
        if (std::abs(scaled.imag()) > 1e-8 || nearest < -1 || nearest > 1 ||
            std::abs(scaled.real() - static_cast<double>(nearest)) > 1e-8)
            throw IndicatorOffLattice("square-walk coefficient times group order is (" +
                                      std::to_string(scaled.real()) + ", " +
                                      std::to_string(scaled.imag()) +
                                      "i), not within 1e-8 of {-1, 0, 1}");
        // Snap onto the lattice: the eigenvalue is the indicator over the degree.
        spectrum.fs[j] = static_cast<int>(nearest);
        spectrum.m[j] = static_cast<double>(nearest) / order;
        spectrum.b[j] = static_cast<double>(nearest) / static_cast<double>(spectrum.degrees[j]);
    }
    return spectrum;
}

std::vector<double> deviation(const WalkSpectrum& spectrum, const CharacterTable& table, int n) {
    require_positive_steps(n);
    const int s = table.num_classes;
    std::vector<double> dev(s);
    for (int c = 0; c < s; ++c) {
        Complex acc = 0.0;
        for (std::size_t j = 0; j < spectrum.b.size(); ++j)
            acc += static_cast<double>(spectrum.degrees[j]) * pow_int(spectrum.b[j], n) *
                   table.value(spectrum.rows[j], c);
        dev[c] = acc.real() / static_cast<double>(table.group_order);
    }
    return dev;
}

double exact_l2_distance(const WalkSpectrum& spectrum, int order, int n) {
    require_positive_steps(n);
    double total = 0.0;
    for (std::size_t j = 0; j < spectrum.b.size(); ++j) {
        double d = spectrum.degrees[j];
        total += d * d * pow_int(std::norm(spectrum.b[j]), n);
    }
    return std::sqrt(total) / static_cast<double>(order);
}

double theorem1_distance(const CharacterTable& table, int n) {
    require_positive_steps(n);
    double total = 0.0;
    for (int row : real_nonprincipal(table)) {
        double d = table.degrees[row];
        total += pow_int(1.0 / (d * d), n - 1);
    }
    return std::sqrt(total) / static_cast<double>(table.group_order);
}

AsymptoticRate asymptotic_rate(const CharacterTable& table) {
    AsymptoticRate rate;
    auto real_rows = real_nonprincipal(table);
    if (real_rows.empty()) {
        rate.exactly_uniform = true;
        rate.converges = true;
        return rate;
    }
    rate.d = table.degrees[real_rows.front()];
    for (int row : real_rows)
        rate.d = std::min(rate.d, table.degrees[row]);
    for (int row : real_rows)
        if (table.degrees[row] == rate.d)
            ++rate.t;
    rate.leading_coefficient =
        std::sqrt(static_cast<double>(rate.t)) * rate.d / static_cast<double>(table.group_order);
    rate.base = 1.0 / rate.d;
    rate.converges = rate.d > 1;
    if (!rate.converges)
        rate.limit = std::sqrt(static_cast<double>(rate.t)) / static_cast<double>(table.group_order);
    return rate;
}

ConvergenceReport convergence_report(const GroupTable& g, const ClassPartition& /*classes*/,
                                     const CharacterTable& table, const SquaringProfile& profile) {
    ConvergenceReport report;

    AsymptoticRate rate = asymptotic_rate(table);
    report.predicate_a = !rate.exactly_uniform && !rate.converges;
    if (!rate.exactly_uniform) {
        report.min_real_degree = rate.d;
        report.multiplicity = rate.t;
    }

    report.predicate_b = !linear_real(table).empty();

    auto g1 = subgroup_generated(g, profile.support);
    report.g1_order = static_cast<long>(g1.size());
    report.predicate_c = report.g1_order != g.order;

    auto commutators = commutator_subgroup(g);
    long abelianization_order = g.order / static_cast<long>(commutators.size());
    report.predicate_d = abelianization_order % 2 == 0;

    if (report.predicate_a != report.predicate_b || report.predicate_b != report.predicate_c ||
        report.predicate_c != report.predicate_d)
        throw EquivalenceViolation(
            "convergence predicates disagree: a=" + std::to_string(report.predicate_a) +
            " b=" + std::to_string(report.predicate_b) + " c=" + std::to_string(report.predicate_c) +
            " d=" + std::to_string(report.predicate_d));
    return report;
}

G1Report converges_on_g1(const GroupTable& g, const SquaringProfile& profile) {
    G1Report report;
    report.identity_in_support = profile.r[0] > 0;
    report.g1_order = static_cast<long>(subgroup_generated(g, profile.support).size());
    // The support of the step distribution contains the identity, so it meets
    // every coset of every subgroup it generates; convergence on <support>
    // follows.
    report.converges = report.identity_in_support;
    return report;
}

} // namespace sqwalk
