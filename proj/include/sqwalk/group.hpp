#pragma once

#include <cstdint>
#include <vector>

#include "sqwalk/permutation.hpp"

namespace sqwalk {

inline constexpr int kDefaultMaxOrder = 5000;

// A finite permutation group materialized as an indexed element list with
// dense multiplication and inverse tables. Element 0 is the identity and
// elements are numbered in breadth-first discovery order from the identity
// (generators applied in the given order), so indices are reproducible.
struct GroupTable {
    int order = 0;
    std::vector<Permutation> elements;
    std::vector<int32_t> mul; // order x order, row-major: mul[a*order+b] = index of a*b
    std::vector<int32_t> inv;
    std::vector<int> generator_indices;

    int degree() const { return elements.empty() ? 0 : elements[0].degree(); }
    int at(int a, int b) const { return mul[static_cast<std::size_t>(a) * order + b]; }
    int inverse(int a) const { return inv[a]; }
};

// Closes the generators under composition. Throws OrderCapExceeded once the
// closure grows past max_order, InvalidPermutation on degree mismatch.
// With no generators the trivial group on `degree_if_empty` points is returned.
GroupTable generate_group(const std::vector<Permutation>& generators,
                          int max_order = kDefaultMaxOrder,
                          int degree_if_empty = 1);

// Conjugacy class structure. Classes are ordered by (size ascending, minimal
// element index); the identity class always comes out first as class 0.
struct ClassPartition {
    std::vector<int> class_of;        // element index -> class index
    std::vector<int> class_sizes;
    std::vector<int> representatives; // minimal element index per class
    int num_classes = 0;
};

ClassPartition conjugacy_classes(const GroupTable& g);

// r[x] = number of square roots of x in the group; support = {x : r[x] > 0},
// i.e. the set of squares. The identity is always in the support.
struct SquaringProfile {
    std::vector<int> r;
    std::vector<int> support; // sorted element indices
};

SquaringProfile squaring_profile(const GroupTable& g);

// Closure of subset (plus the identity) under multiplication and inversion,
// as a sorted element-index set.
std::vector<int> subgroup_generated(const GroupTable& g, const std::vector<int>& subset);

// Subgroup generated by all commutators g^-1 h^-1 g h, sorted.
std::vector<int> commutator_subgroup(const GroupTable& g);

} // namespace sqwalk
