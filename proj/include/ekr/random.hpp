#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ekr/family.hpp"

namespace ekr {

/// Uniform m-subset of binom([n], k) by partial Fisher-Yates over the level.
template <class Rng>
SetFamily random_family(int n, int k, std::size_t m, Rng& rng) {
    check_segment_args(n, k, m);
    SetFamily level = full_level(n, k);
    std::vector<KSet> sets(level.begin(), level.end());
    for (std::size_t i = 0; i < m; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, sets.size() - 1);
        std::swap(sets[i], sets[pick(rng)]);
    }
    sets.resize(m);
    return SetFamily(n, k, std::move(sets));
}

inline SetFamily random_family(int n, int k, std::size_t m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_family(n, k, m, rng);
}

}  // namespace ekr
