#pragma once

#include <array>
#include <optional>
#include <vector>

#include "lensgem/coloured_graph.hpp"

namespace lensgem {

/// Residue structure of a 4-coloured graph.
struct Residues {
    /// g_{ij}, indexed by ColourPair::index().
    std::array<int, 6> pair_counts{};
    /// g_{\hat c}: number of components of the subgraph missing colour c.
    std::array<int, 4> triple_counts{};
    std::array<std::vector<BicolouredCycle>, 6> cycles;
    /// Component id per vertex for each 3-coloured residue (missing colour c).
    std::array<std::vector<int>, 4> triple_components;

    [[nodiscard]] int g(Colour i, Colour j) const { return pair_counts[ColourPair{i, j}.index()]; }
    [[nodiscard]] int g_hat(Colour c) const { return triple_counts[c]; }
};

Residues residues(const ColouredGraph& g);

struct Classification {
    bool connected = false;
    bool bipartite = false;
    bool contracted = false;
};

Classification classify(const ColouredGraph& g);

/// Bipartition class (0/1) per vertex, vertex 0 in class 0; empty if the graph
/// has an odd cycle. Disconnected graphs colour each component from its lowest vertex.
std::optional<std::vector<int>> bipartition(const ColouredGraph& g);

/// Every component of every 3-coloured residue has Euler characteristic 2.
bool represents_closed_3manifold(const ColouredGraph& g);

/// Regular embedding of a connected graph attached to a colour partition.
struct EmbeddingSurface {
    PartitionPair partition;
    std::vector<BicolouredCycle> faces;
    int euler_characteristic = 0;
    /// Orientable genus if `orientable`, crosscap number otherwise.
    int genus = 0;
    bool orientable = true;
};

EmbeddingSurface embedding_surface(const ColouredGraph& g, const PartitionPair& partition);

/// Minimum embedding genus over the three partitions.
int regular_genus(const ColouredGraph& g);

/// Crystallization of a closed 3-manifold: connected, contracted and every
/// 3-residue a sphere.
bool is_crystallization(const ColouredGraph& g);

}  // namespace lensgem
