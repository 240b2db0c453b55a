#include "sqwalk/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "sqwalk/errors.hpp"
#include "sqwalk/kernels.hpp"

namespace sqwalk::oracle {

void validate_probability(const DenseProbability& p) {
    if (p.p.empty())
        throw Error(ErrorKind::Usage, "empty probability");
    for (double v : p.p)
        if (v < 0.0)
            throw Error(ErrorKind::Usage, "probability has a negative entry");
    double total = kernels::sum(p.p.data(), p.order());
    if (std::abs(total - 1.0) > 1e-12)
        throw Error(ErrorKind::Usage,
                    "probability mass is " + std::to_string(total) + ", expected 1");
}

DenseProbability uniform_probability(int order) {
    DenseProbability out;
    out.p.assign(order, 1.0 / order);
    return out;
}

DenseProbability point_mass_at_identity(int order) {
    DenseProbability out;
    out.p.assign(order, 0.0);
    out.p[0] = 1.0;
    return out;
}

DenseProbability dense_from_class(const ClassProbability& cp, const ClassPartition& classes) {
    DenseProbability out;
    out.p.resize(classes.class_of.size());
    for (std::size_t e = 0; e < out.p.size(); ++e)
        out.p[e] = cp.per_class[classes.class_of[e]];
    return out;
}

DenseProbability convolve(const DenseProbability& p, const DenseProbability& q,
                          const GroupTable& g) {
    if (p.order() != g.order || q.order() != g.order)
        throw Error(ErrorKind::Usage, "probability size does not match the group order");
    DenseProbability out;
    out.p.resize(g.order);
    kernels::convolve(out.p.data(), p.p.data(), q.p.data(), g.mul.data(), g.inv.data(), g.order);
    return out;
}

DenseProbability convolution_power(const DenseProbability& p, int n, const GroupTable& g,
                                   PowerStrategy strategy) {
    if (n < 1)
        throw Error(ErrorKind::Usage, "convolution power needs n >= 1");
    if (strategy == PowerStrategy::Iterated) {
        DenseProbability acc = p;
        for (int i = 1; i < n; ++i)
            acc = convolve(acc, p, g);
        return acc;
    }
    DenseProbability acc = point_mass_at_identity(g.order);
    DenseProbability base = p;
    int e = n;
    while (e > 0) {
        if (e & 1)
            acc = convolve(acc, base, g);
        e >>= 1;
        if (e > 0)
            base = convolve(base, base, g);
    }
    return acc;
}

double l2_distance_to_uniform(const DenseProbability& p) {
    const int n = p.order();
    return std::sqrt(kernels::sum_sq_dev(p.p.data(), n, 1.0 / n) / n);
}

double tv_distance_to_uniform(const DenseProbability& p) {
    const double u = 1.0 / p.order();
    double total = 0.0;
    for (double v : p.p)
        total += std::abs(v - u);
    return 0.5 * total;
}

RestrictedWalk restrict_to_subgroup(const DenseProbability& p, const GroupTable& g,
                                    const std::vector<int>& subgroup_elements) {
    std::vector<char> in_subgroup(g.order, 0);
    for (int e : subgroup_elements) {
        if (e < 0 || e >= g.order)
            throw Error(ErrorKind::Usage, "subgroup contains an invalid element index");
        in_subgroup[e] = 1;
    }
    if (subgroup_elements.empty() || !in_subgroup[0])
        throw Error(ErrorKind::Usage, "subgroup must contain the identity");
    for (int e = 0; e < g.order; ++e)
        if (p.p[e] > 0.0 && !in_subgroup[e])
            throw SupportEscapesSubgroup("probability mass " + std::to_string(p.p[e]) +
                                         " on element " + std::to_string(e) +
                                         " outside the subgroup");

    std::vector<Permutation> h_perms;
    h_perms.reserve(subgroup_elements.size());
    for (int e : subgroup_elements)
        h_perms.push_back(g.elements[e]);

    RestrictedWalk out;
    // Re-closing the elements reproduces exactly the subgroup (it is closed);
    // a larger closure would trip the cap and flag a non-subgroup input.
    out.subgroup = generate_group(h_perms, static_cast<int>(subgroup_elements.size()),
                                  g.degree() > 0 ? g.degree() : 1);

    std::unordered_map<Permutation, int, PermutationHash> parent_index;
    for (int e : subgroup_elements)
        parent_index.emplace(g.elements[e], e);

    out.parent_index.resize(out.subgroup.order);
    out.probability.p.resize(out.subgroup.order);
    for (int i = 0; i < out.subgroup.order; ++i) {
        int pe = parent_index.at(out.subgroup.elements[i]);
        out.parent_index[i] = pe;
        out.probability.p[i] = p.p[pe];
    }
    return out;
}

std::vector<uint64_t> sample_walk_counts(const DenseProbability& p, const GroupTable& g, int n,
                                         uint64_t chains, uint64_t seed) {
    validate_probability(p);
    if (p.order() != g.order)
        throw Error(ErrorKind::Usage, "probability size does not match the group order");
    if (n < 1)
        throw Error(ErrorKind::Usage, "walk length must be at least 1");
    if (chains < 1)
        throw Error(ErrorKind::Usage, "need at least one chain");

    std::vector<int32_t> support;
    std::vector<double> cum;
    double running = 0.0;
    for (int e = 0; e < g.order; ++e) {
        if (p.p[e] > 0.0) {
            support.push_back(e);
            running += p.p[e];
            cum.push_back(running);
        }
    }

    std::vector<uint64_t> counts(g.order, 0);
    kernels::walk_endpoints(counts.data(), cum.data(), support.data(),
                            static_cast<int>(support.size()), g.mul.data(), g.order, n, chains,
                            seed);
    return counts;
}

DenseProbability sample_walk(const DenseProbability& p, const GroupTable& g, int n,
                             uint64_t chains, uint64_t seed) {
    auto counts = sample_walk_counts(p, g, n, chains, seed);
    DenseProbability out;
    out.p.resize(g.order);
    for (int e = 0; e < g.order; ++e)
        out.p[e] = static_cast<double>(counts[e]) / static_cast<double>(chains);
    return out;
}

EmpiricalL2 empirical_l2_to_uniform(const std::vector<uint64_t>& counts, uint64_t chains,
                                    std::optional<double> exact_distance) {
    const int n = static_cast<int>(counts.size());
    const double u = 1.0 / n;
    const double big_n = static_cast<double>(chains);

    std::vector<double> phat(n);
    for (int e = 0; e < n; ++e)
        phat[e] = static_cast<double>(counts[e]) / big_n;

    EmpiricalL2 out;
    double s_hat = kernels::sum_sq_dev(phat.data(), n, u) / n;
    out.plug_in = std::sqrt(s_hat);

    // E[(phat-u)^2] exceeds (p-u)^2 by the multinomial sampling variance;
    // subtract its unbiased estimate.
    double var_sum = 0.0;
    for (int e = 0; e < n; ++e)
        var_sum += phat[e] * (1.0 - phat[e]);
    if (chains > 1)
        var_sum *= big_n / (big_n - 1.0);
    double s_debiased = s_hat - var_sum / (n * big_n);
    out.debiased = std::sqrt(std::max(s_debiased, 0.0));

    // Delta-method variance of s_hat: the linear term in the multinomial
    // fluctuations plus the chi-square-style quadratic term.
    double w_sq_p = 0.0, w_p = 0.0, p2 = 0.0, p3 = 0.0;
    for (int e = 0; e < n; ++e) {
        double w = 2.0 * (phat[e] - u) / n;
        w_sq_p += w * w * phat[e];
        w_p += w * phat[e];
        p2 += phat[e] * phat[e];
        p3 += phat[e] * phat[e] * phat[e];
    }
    double var_linear = (w_sq_p - w_p * w_p) / big_n;
    double frob = (p2 - 2.0 * p3 + p2 * p2) / (big_n * big_n);
    double var_quad = 2.0 * frob / (static_cast<double>(n) * n);
    double se_s = std::sqrt(std::max(var_linear + var_quad, 0.0));

    // Error bar in distance units; near zero the sqrt scale takes over.
    double denom = exact_distance && *exact_distance > 0.0 ? *exact_distance : out.debiased;
    denom = std::max(denom, std::sqrt(se_s));
    out.std_error = denom > 0.0 ? se_s / (2.0 * denom) : 0.0;
    return out;
}

} // namespace sqwalk::oracle
