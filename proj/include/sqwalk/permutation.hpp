#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace sqwalk {

// Default cap on the number of moved points.
inline constexpr int kDefaultDegreeLimit = 64;

// A permutation of {0, ..., degree-1}, stored as its image table.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int degree);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int point) const { return images_[point]; }
    const std::vector<int>& images() const { return images_; }

    // Function composition: (a * b)(x) = a(b(x)).
    friend Permutation operator*(const Permutation& a, const Permutation& b);

    Permutation inverse() const;

    // Same mapping on a larger point set (extra points fixed).
    Permutation extended(int degree) const;

    bool is_identity() const;
    bool operator==(const Permutation&) const = default;

    // Disjoint-cycle notation with 0-based points, e.g. "(0 1)(2 3)".
    // The identity prints as "()".
    std::string cycle_string() const;

private:
    std::vector<int> images_;
};

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const noexcept;
};

// Parses comma-separated permutations in cycle notation, e.g.
// "(0 1)(2 3), (0 1 2)". Whitespace is insignificant and fixed points are
// omitted. All results are padded to the common degree (max point + 1).
std::vector<Permutation> parse_generators(const std::string& text,
                                          int degree_limit = kDefaultDegreeLimit);

} // namespace sqwalk
