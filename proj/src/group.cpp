#include "sqwalk/group.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "sqwalk/errors.hpp"

namespace sqwalk {

namespace {

using ElementIndex = std::unordered_map<Permutation, int, PermutationHash>;

// mul tables above this many cells (2 GiB of int32) would not fit in memory.
constexpr long kTableCellCap = 500000000L;

} // namespace

GroupTable generate_group(const std::vector<Permutation>& generators, int max_order,
                          int degree_if_empty) {
    if (max_order < 1)
        throw Error(ErrorKind::Usage, "max_order must be at least 1");

    int degree = generators.empty() ? degree_if_empty : generators[0].degree();
    for (const auto& g : generators)
        if (g.degree() != degree)
            throw InvalidPermutation("generators act on different numbers of points");

    GroupTable table;
    table.elements.push_back(Permutation::identity(degree));
    ElementIndex index;
    index.emplace(table.elements[0], 0);

    // Breadth-first closure; parent/via record how each element was reached.
    std::vector<int> parent{-1}, via{-1};
    for (std::size_t head = 0; head < table.elements.size(); ++head) {
        for (std::size_t j = 0; j < generators.size(); ++j) {
            Permutation next = table.elements[head] * generators[j];
            if (index.contains(next))
                continue;
            if (static_cast<int>(table.elements.size()) >= max_order)
                throw OrderCapExceeded("group closure exceeds max_order = " +
                                       std::to_string(max_order));
            index.emplace(next, static_cast<int>(table.elements.size()));
            parent.push_back(static_cast<int>(head));
            via.push_back(static_cast<int>(j));
            table.elements.push_back(std::move(next));
        }
    }

    const int n = static_cast<int>(table.elements.size());
    table.order = n;
    if (static_cast<long>(n) * n > kTableCellCap)
        throw OrderCapExceeded("multiplication table for order " + std::to_string(n) +
                               " would be too large");

    // Right multiplication by each generator, as a map on element indices.
    std::vector<std::vector<int32_t>> sigma(generators.size());
    for (std::size_t j = 0; j < generators.size(); ++j) {
        sigma[j].resize(n);
        for (int e = 0; e < n; ++e)
            sigma[j][e] = index.at(table.elements[e] * generators[j]);
    }

    // mul[i][y]: the identity column is i itself; every other y was first
    // reached as parent(y)*gen(y), so mul[i][y] = sigma[gen(y)][mul[i][parent(y)]].
    table.mul.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        int32_t* row = table.mul.data() + static_cast<std::size_t>(i) * n;
        row[0] = i;
        for (int y = 1; y < n; ++y)
            row[y] = sigma[via[y]][row[parent[y]]];
    }

    table.inv.resize(n);
    for (int i = 0; i < n; ++i)
        table.inv[i] = index.at(table.elements[i].inverse());

    table.generator_indices.reserve(generators.size());
    for (const auto& g : generators)
        table.generator_indices.push_back(index.at(g));

    return table;
}

ClassPartition conjugacy_classes(const GroupTable& g) {
    const int n = g.order;
    std::vector<int> raw_id(n, -1);
    std::vector<std::vector<int>> raw;

    for (int x = 0; x < n; ++x) {
        if (raw_id[x] != -1)
            continue;
        int id = static_cast<int>(raw.size());
        std::vector<int> members;
        for (int c = 0; c < n; ++c) {
            int y = g.at(g.at(g.inverse(c), x), c);
            if (raw_id[y] == -1) {
                raw_id[y] = id;
                members.push_back(y);
            }
        }
        std::sort(members.begin(), members.end());
        raw.push_back(std::move(members));
    }

    // (size, minimal element) order; the identity class is the size-1 class
    // containing element 0, so it lands first.
    std::vector<int> perm(raw.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        if (raw[a].size() != raw[b].size())
            return raw[a].size() < raw[b].size();
        return raw[a][0] < raw[b][0];
    });

    ClassPartition out;
    out.num_classes = static_cast<int>(raw.size());
    out.class_of.resize(n);
    out.class_sizes.resize(out.num_classes);
    out.representatives.resize(out.num_classes);
    for (int c = 0; c < out.num_classes; ++c) {
        const auto& members = raw[perm[c]];
        out.class_sizes[c] = static_cast<int>(members.size());
        out.representatives[c] = members[0];
        for (int m : members)
            out.class_of[m] = c;
    }
    return out;
}

SquaringProfile squaring_profile(const GroupTable& g) {
    SquaringProfile out;
    out.r.assign(g.order, 0);
    for (int x = 0; x < g.order; ++x)
        ++out.r[g.at(x, x)];
    for (int x = 0; x < g.order; ++x)
        if (out.r[x] > 0)
            out.support.push_back(x);
    return out;
}

std::vector<int> subgroup_generated(const GroupTable& g, const std::vector<int>& subset) {
    for (int s : subset)
        if (s < 0 || s >= g.order)
            throw Error(ErrorKind::Usage, "subset contains an invalid element index");

    std::vector<int> gens;
    for (int s : subset) {
        gens.push_back(s);
        gens.push_back(g.inverse(s));
    }

    std::vector<char> in(g.order, 0);
    std::vector<int> members{0};
    in[0] = 1;
    for (std::size_t head = 0; head < members.size(); ++head) {
        for (int t : gens) {
            int y = g.at(members[head], t);
            if (!in[y]) {
                in[y] = 1;
                members.push_back(y);
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

std::vector<int> commutator_subgroup(const GroupTable& g) {
    std::vector<char> seen(g.order, 0);
    std::vector<int> commutators;
    for (int a = 0; a < g.order; ++a) {
        int ia = g.inverse(a);
        for (int b = 0; b < g.order; ++b) {
            int c = g.at(g.at(g.at(ia, g.inverse(b)), a), b);
            if (!seen[c]) {
                seen[c] = 1;
                commutators.push_back(c);
            }
        }
    }
    return subgroup_generated(g, commutators);
}

} // namespace sqwalk
