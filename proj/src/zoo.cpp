#include "sqwalk/zoo.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "sqwalk/errors.hpp"

namespace sqwalk {

namespace {

// Left multiplication by i and j in the regular action on
// {1, -1, i, -i, j, -j, k, -k}.
constexpr const char* kQuaternionGenerators = "(0 2 1 3)(4 6 5 7), (0 4 1 5)(2 7 3 6)";

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    std::size_t b = s.find_last_not_of(" \t");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

int parse_parameter(const std::string& text, const std::string& token) {
    if (text.empty())
        throw Error(ErrorKind::Usage, "group token '" + token + "' is missing its parameter");
    for (char c : text)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw Error(ErrorKind::Usage, "bad parameter in group token '" + token + "'");
    int value = std::stoi(text);
    if (value < 1)
        throw Error(ErrorKind::Usage, "group parameter must be at least 1 in '" + token + "'");
    return value;
}

ZooSpec parse_token(const std::string& raw) {
    std::string token = trim(raw);
    if (token.empty())
        throw Error(ErrorKind::Usage, "empty group token");

    std::string low = lower(token);
    auto parameterized = [&](Family family, std::size_t prefix_len) {
        ZooSpec spec;
        spec.family = family;
        spec.parameter = parse_parameter(token.substr(prefix_len), token);
        return spec;
    };

    if (low == "q8" || low == "quaternion8") {
        ZooSpec spec;
        spec.family = Family::Quaternion8;
        return spec;
    }
    if (low.starts_with("cyclic:"))
        return parameterized(Family::Cyclic, 7);
    if (low.starts_with("dihedral:"))
        return parameterized(Family::Dihedral, 9);
    if (low.starts_with("symmetric:"))
        return parameterized(Family::Symmetric, 10);
    if (low.starts_with("alternating:"))
        return parameterized(Family::Alternating, 12);
    if (low.size() >= 2 && std::isdigit(static_cast<unsigned char>(low[1]))) {
        switch (low[0]) {
        case 'c':
            return parameterized(Family::Cyclic, 1);
        case 'd':
            return parameterized(Family::Dihedral, 1);
        case 's':
            return parameterized(Family::Symmetric, 1);
        case 'a':
            return parameterized(Family::Alternating, 1);
        default:
            break;
        }
    }
    throw Error(ErrorKind::Usage, "unrecognized group token '" + token + "'");
}

void validate_family_parameter(const ZooSpec& spec) {
    switch (spec.family) {
    case Family::Cyclic:
        if (spec.parameter < 1)
            throw Error(ErrorKind::Usage, "group parameter must be at least 1");
        break;
    case Family::Dihedral:
        if (spec.parameter < 3)
            throw Error(ErrorKind::Usage,
                        "dihedral groups need at least 3 points (D" +
                            std::to_string(spec.parameter) + " requested)");
        break;
    case Family::Symmetric:
    case Family::Alternating:
        if (spec.parameter < 1)
            throw Error(ErrorKind::Usage, "group parameter must be at least 1");
        if (spec.parameter > 8)
            throw Error(ErrorKind::Usage, "symmetric/alternating families are capped at 8 points");
        break;
    case Family::DirectProduct:
        if (spec.factors.empty())
            throw Error(ErrorKind::Usage, "direct product needs at least one factor");
        for (const auto& factor : spec.factors)
            validate_family_parameter(factor);
        break;
    default:
        break;
    }
}

} // namespace

ZooSpec parse_group_spec(const std::string& text) {
    std::string trimmed = trim(text);
    if (trimmed.empty())
        throw Error(ErrorKind::Usage, "empty group spec");

    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= trimmed.size(); ++i) {
        if (i == trimmed.size() || trimmed[i] == 'x' || trimmed[i] == 'X') {
            parts.push_back(trimmed.substr(start, i - start));
            start = i + 1;
        }
    }

    std::vector<ZooSpec> specs;
    for (const auto& part : parts) {
        ZooSpec spec = parse_token(part);
        validate_family_parameter(spec);
        specs.push_back(std::move(spec));
    }
    if (specs.size() == 1)
        return specs[0];
    ZooSpec product;
    product.family = Family::DirectProduct;
    product.factors = std::move(specs);
    return product;
}

ZooSpec custom_spec(const std::string& generators) {
    ZooSpec spec;
    spec.family = Family::Custom;
    spec.generators = generators;
    return spec;
}

std::string canonical_name(const ZooSpec& spec) {
    switch (spec.family) {
    case Family::Cyclic:
        return "C" + std::to_string(spec.parameter);
    case Family::Dihedral:
        return "D" + std::to_string(spec.parameter);
    case Family::Symmetric:
        return "S" + std::to_string(spec.parameter);
    case Family::Alternating:
        return "A" + std::to_string(spec.parameter);
    case Family::Quaternion8:
        return "Q8";
    case Family::DirectProduct: {
        std::string name;
        for (std::size_t i = 0; i < spec.factors.size(); ++i) {
            if (i)
                name += "x";
            name += canonical_name(spec.factors[i]);
        }
        return name;
    }
    case Family::Custom:
        return "<" + spec.generators + ">";
    }
    return "?";
}

namespace {

Permutation cycle_on_range(int offset, int length, int degree) {
    std::vector<int> images(degree);
    std::iota(images.begin(), images.end(), 0);
    for (int i = 0; i < length; ++i)
        images[offset + i] = offset + (i + 1) % length;
    return Permutation(std::move(images));
}

std::vector<Permutation> generators_on_points(const ZooSpec& spec, int& degree_out) {
    switch (spec.family) {
    case Family::Cyclic: {
        int m = spec.parameter;
        degree_out = m;
        if (m == 1)
            return {};
        return {cycle_on_range(0, m, m)};
    }
    case Family::Dihedral: {
        int m = spec.parameter;
        degree_out = m;
        std::vector<int> reflect(m);
        for (int i = 0; i < m; ++i)
            reflect[i] = (m - i) % m;
        return {cycle_on_range(0, m, m), Permutation(std::move(reflect))};
    }
    case Family::Symmetric: {
        int m = spec.parameter;
        degree_out = std::max(m, 1);
        if (m <= 1)
            return {};
        std::vector<int> swap01(m);
        std::iota(swap01.begin(), swap01.end(), 0);
        swap01[0] = 1;
        swap01[1] = 0;
        if (m == 2)
            return {Permutation(std::move(swap01))};
        return {Permutation(std::move(swap01)), cycle_on_range(0, m, m)};
    }
    case Family::Alternating: {
        int m = spec.parameter;
        degree_out = std::max(m, 1);
        if (m <= 2)
            return {};
        std::vector<int> three(m);
        std::iota(three.begin(), three.end(), 0);
        three[0] = 1;
        three[1] = 2;
        three[2] = 0;
        if (m == 3)
            return {Permutation(std::move(three))};
        // A full cycle is even only on an odd number of points; on an even
        // count, rotate the points past the first instead.
        Permutation big = (m % 2 == 1) ? cycle_on_range(0, m, m) : cycle_on_range(1, m - 1, m);
        return {Permutation(std::move(three)), big};
    }
    case Family::Quaternion8: {
        degree_out = 8;
        return parse_generators(kQuaternionGenerators);
    }
    case Family::DirectProduct: {
        std::vector<Permutation> all;
        int offset = 0;
        std::vector<std::pair<std::vector<Permutation>, int>> factor_parts;
        int total = 0;
        for (const auto& factor : spec.factors) {
            int d = 0;
            auto gens = generators_on_points(factor, d);
            factor_parts.emplace_back(std::move(gens), d);
            total += d;
        }
        degree_out = std::max(total, 1);
        for (auto& [gens, d] : factor_parts) {
            for (auto& gen : gens) {
                std::vector<int> images(degree_out);
                std::iota(images.begin(), images.end(), 0);
                for (int i = 0; i < d; ++i)
                    images[offset + i] = offset + gen(i);
                all.emplace_back(std::move(images));
            }
            offset += d;
        }
        return all;
    }
    case Family::Custom: {
        auto gens = parse_generators(spec.generators);
        degree_out = gens.empty() ? 1 : gens[0].degree();
        return gens;
    }
    }
    throw Error(ErrorKind::Usage, "unknown group family");
}

} // namespace

std::vector<Permutation> family_generators(const ZooSpec& spec) {
    validate_family_parameter(spec);
    int degree = 0;
    return generators_on_points(spec, degree);
}

BuiltGroup build_group(const ZooSpec& spec, int max_order) {
    validate_family_parameter(spec);
    int degree = 1;
    auto gens = generators_on_points(spec, degree);
    if (degree > kDefaultDegreeLimit)
        throw OrderCapExceeded("group acts on " + std::to_string(degree) +
                               " points, above the limit of " +
                               std::to_string(kDefaultDegreeLimit));
    BuiltGroup out;
    out.name = canonical_name(spec);
    out.table = generate_group(gens, max_order, std::max(degree, 1));
    return out;
}

} // namespace sqwalk
