#include "lensgem/dipole.hpp"

#include <bit>

namespace lensgem {

std::optional<Dipole> dipole_between(const ColouredGraph& g, Vertex x, Vertex y) {
    if (x >= g.order() || y >= g.order() || x == y) return std::nullopt;
    unsigned mask = 0;
    for (Colour c = 0; c < kColours; ++c) {
        if (g.neighbour(x, c) == y) mask |= 1u << c;
    }
    const int h = std::popcount(mask);
    if (h < 1 || h > 3) return std::nullopt;
    return Dipole{x, y, mask};
}

namespace {

void require_dipole(const ColouredGraph& g, const Dipole& d) {
    const auto found = dipole_between(g, d.x, d.y);
    if (!found || found->colours != d.colours) throw GemError("not a dipole of the graph");
}

}  // namespace

bool is_eliminable(const ColouredGraph& g, const Dipole& d) {
    require_dipole(g, d);
    const auto comp = component_ids(g, 0xFu & ~d.colours);
    return comp[d.x] != comp[d.y];
}

std::vector<Dipole> eliminable_dipoles(const ColouredGraph& g) {
    std::vector<Dipole> out;
    for (Vertex x = 0; x < g.order(); ++x) {
        for (Colour c = 0; c < kColours; ++c) {
            const Vertex y = g.neighbour(x, c);
            if (y <= x) continue;
            const auto d = dipole_between(g, x, y);
            // Record each vertex pair once, from its lowest shared colour.
            if (!d || std::countr_zero(d->colours) != c) continue;
            if (is_eliminable(g, *d)) out.push_back(*d);
        }
    }
    return out;
}

ColouredGraph eliminate_dipole(const ColouredGraph& g, const Dipole& d) {
    if (!is_eliminable(g, d)) throw GemError("dipole is not eliminable");
    const std::size_t n = g.order();
    constexpr Vertex gone = ~Vertex{0};
    std::vector<Vertex> renumber(n);
    Vertex next = 0;
    for (Vertex v = 0; v < n; ++v) renumber[v] = (v == d.x || v == d.y) ? gone : next++;

    ColouredGraph::Tables tables;
    for (Colour c = 0; c < kColours; ++c) {
        auto inv = std::vector<Vertex>(g.involution(c).begin(), g.involution(c).end());
        if (!(d.colours & (1u << c))) {
            const Vertex xn = inv[d.x], yn = inv[d.y];
            inv[xn] = yn;
            inv[yn] = xn;
        }
        tables[c].resize(n - 2);
        for (Vertex v = 0; v < n; ++v) {
            if (renumber[v] != gone) tables[c][renumber[v]] = renumber[inv[v]];
        }
    }
    return ColouredGraph::from_involutions(n - 2, std::move(tables));
}

ColouredGraph insert_dipole(const ColouredGraph& g, Vertex v, Colour c) {
    if (v >= g.order()) throw GemError("vertex out of range");
    if (c < 0 || c >= kColours) throw GemError("colour out of range");
    const std::size_t n = g.order();
    const auto x = static_cast<Vertex>(n), y = static_cast<Vertex>(n + 1);
    ColouredGraph::Tables tables;
    for (Colour k = 0; k < kColours; ++k) {
        tables[k].assign(g.involution(k).begin(), g.involution(k).end());
        tables[k].resize(n + 2);
        if (k == c) {
            tables[k][x] = y;
            tables[k][y] = x;
        } else {
            const Vertex w = g.neighbour(v, k);
            tables[k][v] = x;
            tables[k][x] = v;
            tables[k][y] = w;
            tables[k][w] = y;
        }
    }
    return ColouredGraph::from_involutions(n + 2, std::move(tables));
}

}  // namespace lensgem
