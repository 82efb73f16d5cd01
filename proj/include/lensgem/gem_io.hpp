#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lensgem/coloured_graph.hpp"

namespace lensgem {

/// Binds a vertex to the crossing label v_{j,i} (j >= 1, 1 <= i <= 4).
struct VertexLabel {
    Vertex vertex = 0;
    int crossing = 0;
    int corner = 0;

    friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

/// A graph together with optional crossing labels, as stored in gem files.
struct LabelledGem {
    ColouredGraph graph;
    std::vector<VertexLabel> labels;

    /// Vertex carrying v_{j,i}; throws if absent.
    [[nodiscard]] Vertex vertex(int crossing, int corner) const;
    /// Number of labelled crossings if the labels cover every vertex exactly
    /// once as v_{j,i}, 1 <= j <= n/4; nullopt otherwise.
    [[nodiscard]] std::optional<int> complete_crossing_count() const;

    friend bool operator==(const LabelledGem&, const LabelledGem&) = default;
};

/// Gem text format:
///   gem <n>
///   c0: i0 i1 ... i(n-1)      (one line per colour 0..3)
///   label <vertex> <j> <i>    (optional, any number)
LabelledGem parse_gem(std::istream& in);
LabelledGem parse_gem(const std::string& text);
void write_gem(std::ostream& out, const ColouredGraph& g, const std::vector<VertexLabel>& labels = {});
std::string format_gem(const ColouredGraph& g, const std::vector<VertexLabel>& labels = {});

LabelledGem read_gem_file(const std::string& path);
void write_gem_file(const std::string& path, const ColouredGraph& g,
                    const std::vector<VertexLabel>& labels = {});

/// True iff the vertex map fixing each v_{j,2}, v_{j,4} and swapping
/// v_{j,1} <-> v_{j,3} is an isomorphism exchanging colours 0<->1 and 2<->3.
/// Throws if the labels do not cover the graph.
bool colour_swap_symmetry(const LabelledGem& gem);

}  // namespace lensgem
