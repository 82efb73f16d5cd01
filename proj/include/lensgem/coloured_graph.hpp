#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lensgem {

using Vertex = std::uint32_t;
using Colour = int;

inline constexpr int kColours = 4;

/// Raised on malformed input or violated preconditions.
class GemError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unordered pair of distinct colours, stored with a < b.
struct ColourPair {
    Colour a = 0;
    Colour b = 1;

    ColourPair() = default;
    ColourPair(Colour x, Colour y);

    [[nodiscard]] bool contains(Colour c) const { return a == c || b == c; }
    /// Index 0..5 in the order {01,02,03,12,13,23}.
    [[nodiscard]] int index() const;
    [[nodiscard]] ColourPair complement() const;

    friend auto operator<=>(const ColourPair&, const ColourPair&) = default;
};

/// All six colour pairs in index order.
std::array<ColourPair, 6> all_colour_pairs();

/// A splitting of {0,1,2,3} into two pairs; `first` always contains colour 0.
struct PartitionPair {
    ColourPair first;
    ColourPair second;

    PartitionPair() = default;
    explicit PartitionPair(ColourPair f);

    /// 0 for {01|23}, 1 for {02|13}, 2 for {03|12}.
    [[nodiscard]] int index() const;
    /// Face families of the regular embedding for the cyclic order (a, c, b, d),
    /// where first = {a, b} and second = {c, d}.
    [[nodiscard]] std::array<ColourPair, 4> face_families() const;

    friend auto operator<=>(const PartitionPair&, const PartitionPair&) = default;
};

std::array<PartitionPair, 3> all_partitions();

/// A bicoloured cycle, normalized: starts at its lowest vertex and leaves it
/// along the lower colour of the pair.
struct BicolouredCycle {
    ColourPair colours;
    std::vector<Vertex> vertices;

    [[nodiscard]] std::size_t length() const { return vertices.size(); }
    friend bool operator==(const BicolouredCycle&, const BicolouredCycle&) = default;
};

/// Regular 4-valent multigraph with a proper 4-edge-colouring, stored as four
/// fixed-point-free involutions on 0..n-1. Immutable after construction.
class ColouredGraph {
public:
    using Tables = std::array<std::vector<Vertex>, kColours>;

    /// Empty placeholder (order 0); not a valid gem.
    ColouredGraph() = default;

    /// Validates and wraps the four involution tables.
    static ColouredGraph from_involutions(std::size_t n, Tables tables);

    [[nodiscard]] std::size_t order() const { return order_; }
    [[nodiscard]] Vertex neighbour(Vertex v, Colour c) const { return tables_[c][v]; }
    [[nodiscard]] std::span<const Vertex> involution(Colour c) const { return tables_[c]; }
    [[nodiscard]] const Tables& tables() const { return tables_; }
    [[nodiscard]] bool connected() const { return connected_; }

    /// Image under a vertex relabelling `perm` (old -> new) and a colour
    /// permutation `colour_map` (old colour -> new colour).
    [[nodiscard]] ColouredGraph relabelled(std::span<const Vertex> perm,
                                           std::array<Colour, kColours> colour_map = {0, 1, 2, 3}) const;

    friend bool operator==(const ColouredGraph& x, const ColouredGraph& y) {
        return x.order_ == y.order_ && x.tables_ == y.tables_;
    }

private:
    ColouredGraph(std::size_t n, Tables tables);

    std::size_t order_ = 0;
    Tables tables_;
    bool connected_ = false;
};

/// All {a,b}-coloured cycles, normalized and sorted by starting vertex.
std::vector<BicolouredCycle> bicoloured_cycles(const ColouredGraph& g, ColourPair pair);

/// Cycles of one colour pair plus a vertex -> cycle id lookup.
struct CycleFamily {
    ColourPair colours;
    std::vector<BicolouredCycle> cycles;
    std::vector<int> cycle_of;

    [[nodiscard]] std::size_t size() const { return cycles.size(); }
};

CycleFamily cycle_family(const ColouredGraph& g, ColourPair pair);

/// Connected components of the subgraph spanned by the colours in `mask`
/// (bit c set = colour c kept). Returns component id per vertex; ids are
/// assigned in order of lowest vertex.
std::vector<int> component_ids(const ColouredGraph& g, unsigned mask, int* count = nullptr);

}  // namespace lensgem
