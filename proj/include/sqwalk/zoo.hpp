#pragma once

#include <string>
#include <vector>

#include "sqwalk/group.hpp"

namespace sqwalk {

// Named group families constructible from the command line.
enum class Family {
    Cyclic,
    Dihedral,
    Symmetric,
    Alternating,
    Quaternion8,
    DirectProduct,
    Custom,
};

struct ZooSpec {
    Family family = Family::Custom;
    int parameter = 0;            // for the parameterized families
    std::vector<ZooSpec> factors; // DirectProduct only
    std::string generators;       // Custom only, cycle notation
};

// Accepts short names ("S3", "C7", "D4", "A5", "Q8"), long names
// ("cyclic:7", "dihedral:4", "symmetric:3", "alternating:5", "quaternion8"),
// and 'x'-separated direct products ("C2xC4"). Throws Error(Usage) on
// malformed input.
ZooSpec parse_group_spec(const std::string& text);

ZooSpec custom_spec(const std::string& generators);

std::string canonical_name(const ZooSpec& spec);

// Generators of the family as permutations on disjoint point sets
// (cyclic C_m as one m-cycle, dihedral on m points, symmetric/alternating via
// standard generators, quaternion8 via its regular action on 8 points).
std::vector<Permutation> family_generators(const ZooSpec& spec);

struct BuiltGroup {
    std::string name;
    GroupTable table;
};

BuiltGroup build_group(const ZooSpec& spec, int max_order = kDefaultMaxOrder);

} // namespace sqwalk
