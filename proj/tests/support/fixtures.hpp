#pragma once

#include <map>
#include <string>
#include <vector>

#include "sqwalk/app.hpp"
#include "sqwalk/zoo.hpp"

namespace fixtures {

// Every group the suite sweeps over (all of order <= 24).
inline const std::vector<std::string>& zoo_names() {
    static const std::vector<std::string> names = {
        "C2", "C3", "C4", "C5", "C6", "C7", "C8", "D3", "D4", "D5",
        "D6", "S3", "S4", "A4", "Q8", "C2xC2", "C2xC4",
    };
    return names;
}

inline const std::vector<std::string>& odd_zoo_names() {
    static const std::vector<std::string> names = {"C3", "C5", "C7"};
    return names;
}

// Full pipeline output, cached per group: building character tables over and
// over would dominate the suite.
inline const sqwalk::app::Analysis& analysis(const std::string& name) {
    static std::map<std::string, sqwalk::app::Analysis> cache;
    auto it = cache.find(name);
    if (it == cache.end())
        it = cache.emplace(name, sqwalk::app::analyze_group(sqwalk::parse_group_spec(name))).first;
    return it->second;
}

} // namespace fixtures
