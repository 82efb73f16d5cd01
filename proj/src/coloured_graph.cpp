#include "lensgem/coloured_graph.hpp"

#include <algorithm>
#include <numeric>

namespace lensgem {

ColourPair::ColourPair(Colour x, Colour y) {
    if (x == y || x < 0 || y < 0 || x >= kColours || y >= kColours) {
        throw GemError("invalid colour pair {" + std::to_string(x) + "," + std::to_string(y) + "}");
    }
    a = std::min(x, y);
    b = std::max(x, y);
}

int ColourPair::index() const {
    static constexpr int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
    return table[a][b];
}

ColourPair ColourPair::complement() const {
    Colour rest[2];
    int k = 0;
    for (Colour c = 0; c < kColours; ++c) {
        if (!contains(c)) rest[k++] = c;
    }
    return {rest[0], rest[1]};
}

std::array<ColourPair, 6> all_colour_pairs() {
    return {ColourPair{0, 1}, ColourPair{0, 2}, ColourPair{0, 3},
            ColourPair{1, 2}, ColourPair{1, 3}, ColourPair{2, 3}};
}

PartitionPair::PartitionPair(ColourPair f) {
    first = f.contains(0) ? f : f.complement();
    second = first.complement();
}

int PartitionPair::index() const { return first.b - 1; }

std::array<ColourPair, 4> PartitionPair::face_families() const {
    const Colour alpha = first.a, beta = first.b, gamma = second.a, delta = second.b;
    return {ColourPair{alpha, gamma}, ColourPair{gamma, beta}, ColourPair{beta, delta},
            ColourPair{delta, alpha}};
}

std::array<PartitionPair, 3> all_partitions() {
    return {PartitionPair{ColourPair{0, 1}}, PartitionPair{ColourPair{0, 2}},
            PartitionPair{ColourPair{0, 3}}};
}

ColouredGraph::ColouredGraph(std::size_t n, Tables tables) : order_(n), tables_(std::move(tables)) {
    int count = 0;
    component_ids(*this, 0xF, &count);
    connected_ = count == 1;
}

ColouredGraph ColouredGraph::from_involutions(std::size_t n, Tables tables) {
    if (n == 0) throw GemError("empty graph");
    if (n % 2 != 0) throw GemError("odd order " + std::to_string(n));
    for (Colour c = 0; c < kColours; ++c) {
        const auto& t = tables[c];
        if (t.size() != n) {
            throw GemError("colour " + std::to_string(c) + " table has " + std::to_string(t.size()) +
                           " entries, expected " + std::to_string(n));
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (t[v] >= n) {
                throw GemError("colour " + std::to_string(c) + ": index " + std::to_string(t[v]) +
                               " out of range");
            }
            if (t[v] == v) {
                throw GemError("colour " + std::to_string(c) + ": loop at vertex " + std::to_string(v));
            }
            if (t[t[v]] != v) {
                throw GemError("colour " + std::to_string(c) + ": not an involution at vertex " +
                               std::to_string(v));
            }
        }
    }
    return ColouredGraph(n, std::move(tables));
}

ColouredGraph ColouredGraph::relabelled(std::span<const Vertex> perm,
                                        std::array<Colour, kColours> colour_map) const {
    if (perm.size() != order_) throw GemError("relabelling has wrong size");
    Tables out;
    for (auto& t : out) t.assign(order_, 0);
    for (Colour c = 0; c < kColours; ++c) {
        auto& dst = out[colour_map[c]];
        for (std::size_t v = 0; v < order_; ++v) dst[perm[v]] = perm[tables_[c][v]];
    }
    return from_involutions(order_, std::move(out));
}

std::vector<BicolouredCycle> bicoloured_cycles(const ColouredGraph& g, ColourPair pair) {
    const std::size_t n = g.order();
    std::vector<char> seen(n, 0);
    std::vector<BicolouredCycle> out;
    for (Vertex start = 0; start < n; ++start) {
        if (seen[start]) continue;
        BicolouredCycle cyc{pair, {}};
        Vertex x = start;
        Colour c = pair.a;
        do {
            seen[x] = 1;
            cyc.vertices.push_back(x);
            x = g.neighbour(x, c);
            c = (c == pair.a) ? pair.b : pair.a;
        } while (!(x == start && c == pair.a));
        out.push_back(std::move(cyc));
    }
    return out;
}

CycleFamily cycle_family(const ColouredGraph& g, ColourPair pair) {
    CycleFamily fam{pair, bicoloured_cycles(g, pair), std::vector<int>(g.order(), -1)};
    for (std::size_t i = 0; i < fam.cycles.size(); ++i) {
        for (Vertex v : fam.cycles[i].vertices) fam.cycle_of[v] = static_cast<int>(i);
    }
    return fam;
}

std::vector<int> component_ids(const ColouredGraph& g, unsigned mask, int* count) {
    const std::size_t n = g.order();
    std::vector<int> id(n, -1);
    std::vector<Vertex> stack;
    int next = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (id[s] >= 0) continue;
        id[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex x = stack.back();
            stack.pop_back();
            for (Colour c = 0; c < kColours; ++c) {
                if (!(mask & (1u << c))) continue;
                const Vertex y = g.neighbour(x, c);
                if (id[y] < 0) {
                    id[y] = next;
                    stack.push_back(y);
                }
            }
        }
        ++next;
    }
    if (count) *count = next;
    return id;
}

}  // namespace lensgem
