#pragma once

#include <optional>
#include <vector>

#include "lensgem/coloured_graph.hpp"

namespace lensgem {

/// Two vertices joined by exactly the edges whose colours are in `colours`
/// (bit c set = colour c), with 1 <= |colours| <= 3.
struct Dipole {
    Vertex x = 0;
    Vertex y = 0;
    unsigned colours = 0;

    friend bool operator==(const Dipole&, const Dipole&) = default;
};

/// The dipole formed by x and y, if they share between one and three edges.
std::optional<Dipole> dipole_between(const ColouredGraph& g, Vertex x, Vertex y);

/// x and y lie in different components of the subgraph on the complementary colours.
bool is_eliminable(const ColouredGraph& g, const Dipole& d);

/// All eliminable dipoles with x < y.
std::vector<Dipole> eliminable_dipoles(const ColouredGraph& g);

/// Removes x and y and welds their neighbours along every colour outside the
/// dipole. Surviving vertices keep their relative order.
ColouredGraph eliminate_dipole(const ColouredGraph& g, const Dipole& d);

/// Inverse move for a 1-dipole: splits the three non-`c` edges at `v`, adding
/// vertices n (attached to v) and n+1, joined by a `c` edge. Returns the new graph;
/// the inserted dipole is {n, n+1, colour c}.
ColouredGraph insert_dipole(const ColouredGraph& g, Vertex v, Colour c);

}  // namespace lensgem
