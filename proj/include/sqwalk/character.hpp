#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "sqwalk/group.hpp"

#include "json.hpp"

namespace sqwalk {

// Complex irreducible character table: one row per character, one column per
// conjugacy class (class order taken from the ClassPartition). Rows are
// ordered principal character first, then by (degree, lexicographic on
// rounded values), so tables are deterministic for a fixed seed.
struct CharacterTable {
    int group_order = 0;
    int num_classes = 0;
    std::vector<std::complex<double>> values; // row-major [num_classes x num_classes]
    std::vector<int> degrees;
    std::vector<int> fs_indicators; // Frobenius-Schur indicator per row, in {-1, 0, +1}
    int principal_index = 0;

    std::complex<double> value(int chi, int cls) const {
        return values[static_cast<std::size_t>(chi) * num_classes + cls];
    }
    std::span<const std::complex<double>> row(int chi) const {
        return {values.data() + static_cast<std::size_t>(chi) * num_classes,
                static_cast<std::size_t>(num_classes)};
    }
};

struct CharacterOptions {
    uint64_t seed = 0x5eedbead;
    int max_attempts = 8;    // reseeded class-matrix combinations before giving up
    int max_classes = 1024;  // dense eigensolve guard
};

// Computes all irreducible complex characters by simultaneous diagonalization
// of the class-multiplication matrices (exact integer data from the Cayley
// table, random real combination, candidates verified against every class
// matrix). Throws EigensplitFailure when no attempt yields a clean table.
CharacterTable character_table(const GroupTable& g, const ClassPartition& classes,
                               const CharacterOptions& options = {});

// Frobenius-Schur indicator of one character row, computed from the squaring
// profile as a weighted class sum. Throws IndicatorOffLattice if the value
// does not land within 1e-8 of {-1, 0, +1}.
int fs_indicator(const GroupTable& g, const ClassPartition& classes,
                 const SquaringProfile& profile, std::span<const std::complex<double>> chi);

// Indices of nonprincipal rows with indicator +-1 (the real characters).
std::vector<int> real_nonprincipal(const CharacterTable& table);

// The degree-1 rows among real_nonprincipal; their values are all +-1.
std::vector<int> linear_real(const CharacterTable& table);

// Serialization: class metadata (size, representative cycle notation), then
// rows as [re, im] pairs, degrees, indicators.
nlohmann::ordered_json character_table_json(const CharacterTable& table,
                                            const ClassPartition& classes,
                                            const GroupTable& g);

} // namespace sqwalk
