#pragma once

// Brute-force references used only by tests. Nothing here calls into the
// library's recursion, cursor or matrix code.

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace oracle {

using U64Triple = std::array<std::uint64_t, 3>;

// Breadth-first expansion of the unit seed: levels[n] holds the 3^n triples
// of level n in index order.
inline std::vector<std::vector<U64Triple>> bfs_levels(int max_level, U64Triple seed = {1, 1, 1}) {
    std::vector<std::vector<U64Triple>> levels{{seed}};
    for (int n = 0; n < max_level; ++n) {
        std::vector<U64Triple> next;
        next.reserve(levels.back().size() * 3);
        for (const auto& [a, b, c] : levels.back()) {
            const std::uint64_t s = a + b + c;
            next.push_back({a, b, s});
            next.push_back({b, c, s});
            next.push_back({c, a, s});
        }
        levels.push_back(std::move(next));
    }
    return levels;
}

// a_1, a_2, ... for every index through max_level; flat[0] is a_1.
inline std::vector<std::uint64_t> flat_sequence(int max_level) {
    std::vector<std::uint64_t> flat;
    for (const auto& level : bfs_levels(max_level))
        for (const auto& t : level)
            flat.insert(flat.end(), t.begin(), t.end());
    return flat;
}

struct Counts {
    std::uint64_t total = 0;
    std::array<std::uint64_t, 3> pos{};
};

inline std::vector<std::map<std::uint64_t, Counts>> tally(int max_level) {
    std::vector<std::map<std::uint64_t, Counts>> out;
    for (const auto& level : bfs_levels(max_level)) {
        auto& m = out.emplace_back();
        for (const auto& t : level)
            for (int k = 0; k < 3; ++k) {
                ++m[t[k]].total;
                ++m[t[k]].pos[k];
            }
    }
    return out;
}

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5EED5EEDull);
    return gen;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

} // namespace oracle
