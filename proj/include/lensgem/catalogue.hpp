#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "lensgem/canonical_code.hpp"
#include "lensgem/coloured_graph.hpp"
#include "lensgem/smith.hpp"

namespace lensgem {

struct CatalogueEntry {
    GemCode code;
    int order = 0;
    /// g_{ij}, indexed by ColourPair::index().
    std::array<int, 6> g{};
    int regular_genus = 0;
    AbelianGroup h1;
    int gm = 0;
    ColouredGraph graph;
};

/// All bipartite crystallizations of closed 3-manifolds of order <= max_order,
/// one per colour-isomorphism class, sorted by code. Parallel over the
/// top-level search branches.
std::vector<CatalogueEntry> enumerate_crystallizations(int max_order, int jobs = 0);

/// Single-threaded reference path.
std::vector<CatalogueEntry> enumerate_crystallizations_serial(int max_order);

/// `<code> <order> <g01> <g02> <g03> <genus> <h1> <gm>`, h1 printed without spaces.
std::string index_line(const CatalogueEntry& e);

/// Writes `entry_NNNN.gem` per entry plus `index.txt` into `dir` (created if needed).
void write_catalogue(const std::string& dir, const std::vector<CatalogueEntry>& entries);

}  // namespace lensgem
