#pragma once

#include <cstdint>
#include <cstdlib>
#include <vector>

#include "lensgem/coloured_graph.hpp"
#include "lensgem/lens.hpp"

namespace fixture {

inline lensgem::ColouredGraph s3_order2() {
    lensgem::ColouredGraph::Tables t;
    for (auto& row : t) row = {1, 0};
    return lensgem::ColouredGraph::from_involutions(2, t);
}

/// Colours 0 and 1 pair {01,23}, colour 2 pairs {02,13}, colour 3 pairs {03,12}.
inline lensgem::ColouredGraph k4_residue() {
    lensgem::ColouredGraph::Tables t;
    t[0] = {1, 0, 3, 2};
    t[1] = {1, 0, 3, 2};
    t[2] = {2, 3, 0, 1};
    t[3] = {3, 2, 1, 0};
    return lensgem::ColouredGraph::from_involutions(4, t);
}

inline lensgem::LabelledCrystallization lens(int p, int q) {
    return lensgem::ferri_crystallization(lensgem::normalize_lens(p, q));
}

/// Seed for randomized tests: LENSGEM_SEED if set, else a fixed value.
inline std::uint64_t seed() {
    if (const char* s = std::getenv("LENSGEM_SEED")) return std::strtoull(s, nullptr, 10);
    return 20131001;
}

}  // namespace fixture
