#include "sqwalk/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "sqwalk/errors.hpp"

namespace sqwalk {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    if (images_.empty())
        throw InvalidPermutation("permutation must act on at least one point");
    std::vector<char> seen(images_.size(), 0);
    for (int img : images_) {
        if (img < 0 || img >= degree())
            throw InvalidPermutation("image " + std::to_string(img) + " out of range");
        if (seen[img])
            throw InvalidPermutation("image " + std::to_string(img) + " repeated; not a bijection");
        seen[img] = 1;
    }
}

Permutation Permutation::identity(int degree) {
    std::vector<int> images(degree);
    for (int i = 0; i < degree; ++i)
        images[i] = i;
    return Permutation(std::move(images));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree())
        throw InvalidPermutation("cannot compose permutations of different degree");
    std::vector<int> images(a.degree());
    for (int x = 0; x < a.degree(); ++x)
        images[x] = a(b(x));
    return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
    std::vector<int> images(degree());
    for (int x = 0; x < degree(); ++x)
        images[images_[x]] = x;
    return Permutation(std::move(images));
}

Permutation Permutation::extended(int degree) const {
    if (degree < this->degree())
        throw InvalidPermutation("cannot shrink a permutation");
    std::vector<int> images(images_);
    for (int i = this->degree(); i < degree; ++i)
        images.push_back(i);
    return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
    for (int x = 0; x < degree(); ++x)
        if (images_[x] != x)
            return false;
    return true;
}

std::string Permutation::cycle_string() const {
    std::vector<char> done(degree(), 0);
    std::ostringstream out;
    bool any = false;
    for (int start = 0; start < degree(); ++start) {
        if (done[start] || images_[start] == start)
            continue;
        any = true;
        out << '(';
        int x = start;
        bool first = true;
        do {
            if (!first)
                out << ' ';
            out << x;
            done[x] = 1;
            x = images_[x];
            first = false;
        } while (x != start);
        out << ')';
    }
    return any ? out.str() : "()";
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull; // FNV-1a
    for (int img : p.images()) {
        h ^= static_cast<std::size_t>(img);
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

struct CycleParser {
    const std::string& text;
    std::size_t pos = 0;

    explicit CycleParser(const std::string& t) : text(t) {}

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool at_end() {
        skip_space();
        return pos >= text.size();
    }

    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }

    int parse_point() {
        skip_space();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start)
            throw InvalidPermutation("expected a point index at position " + std::to_string(start) +
                                     " in '" + text + "'");
        long value = 0;
        try {
            value = std::stol(text.substr(start, pos - start));
        } catch (const std::out_of_range&) {
            throw InvalidPermutation("point index out of range in '" + text + "'");
        }
        if (value > 1 << 20)
            throw InvalidPermutation("point index " + std::to_string(value) + " is absurdly large");
        return static_cast<int>(value);
    }

    // One '(...)' group; commas inside a cycle are treated as whitespace.
    std::vector<int> parse_cycle() {
        skip_space();
        if (peek() != '(')
            throw InvalidPermutation("expected '(' at position " + std::to_string(pos));
        ++pos;
        std::vector<int> points;
        while (true) {
            skip_space();
            if (pos >= text.size())
                throw InvalidPermutation("unterminated cycle in '" + text + "'");
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            if (text[pos] == ',') {
                ++pos;
                continue;
            }
            points.push_back(parse_point());
        }
        return points;
    }
};

} // namespace

std::vector<Permutation> parse_generators(const std::string& text, int degree_limit) {
    // Top-level commas separate permutations; each permutation is a product
    // of disjoint cycles.
    std::vector<std::vector<std::vector<int>>> perms; // perm -> cycles -> points
    CycleParser p(text);
    int max_point = -1;

    while (!p.at_end()) {
        std::vector<std::vector<int>> cycles;
        while (!p.at_end() && p.peek() == '(') {
            auto cycle = p.parse_cycle();
            for (int pt : cycle)
                max_point = std::max(max_point, pt);
            if (!cycle.empty())
                cycles.push_back(std::move(cycle));
        }
        if (!p.at_end()) {
            if (p.peek() != ',')
                throw InvalidPermutation("unexpected character '" + std::string(1, p.peek()) +
                                         "' in '" + text + "'");
            ++p.pos;
        }
        perms.push_back(std::move(cycles));
    }

    int degree = std::max(max_point + 1, 1);
    if (degree > degree_limit)
        throw OrderCapExceeded("permutation degree " + std::to_string(degree) +
                               " exceeds the limit of " + std::to_string(degree_limit) + " points");

    std::vector<Permutation> out;
    out.reserve(perms.size());
    for (const auto& cycles : perms) {
        std::vector<int> images(degree);
        for (int i = 0; i < degree; ++i)
            images[i] = i;
        std::vector<char> moved(degree, 0);
        for (const auto& cycle : cycles) {
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                int from = cycle[i];
                int to = cycle[(i + 1) % cycle.size()];
                if (moved[from])
                    throw InvalidPermutation("point " + std::to_string(from) +
                                             " appears in two cycles of one permutation");
                moved[from] = 1;
                images[from] = to;
            }
        }
        out.emplace_back(std::move(images));
    }
    return out;
}

} // namespace sqwalk
