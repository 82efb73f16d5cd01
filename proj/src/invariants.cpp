#include "lensgem/invariants.hpp"

namespace lensgem {

namespace {

unsigned mask_without(Colour c) { return 0xFu & ~(1u << c); }

}  // namespace

Residues residues(const ColouredGraph& g) {
    Residues r;
    for (ColourPair pair : all_colour_pairs()) {
        const int k = pair.index();
        r.cycles[k] = bicoloured_cycles(g, pair);
        r.pair_counts[k] = static_cast<int>(r.cycles[k].size());
    }
    for (Colour c = 0; c < kColours; ++c) {
        r.triple_components[c] = component_ids(g, mask_without(c), &r.triple_counts[c]);
    }
    return r;
}

std::optional<std::vector<int>> bipartition(const ColouredGraph& g) {
    const std::size_t n = g.order();
    std::vector<int> side(n, -1);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex x = stack.back();
            stack.pop_back();
            for (Colour c = 0; c < kColours; ++c) {
                const Vertex y = g.neighbour(x, c);
                if (side[y] < 0) {
                    side[y] = 1 - side[x];
                    stack.push_back(y);
                } else if (side[y] == side[x]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

Classification classify(const ColouredGraph& g) {
    Classification out;
    out.connected = g.connected();
    out.bipartite = bipartition(g).has_value();
    out.contracted = true;
    for (Colour c = 0; c < kColours; ++c) {
        int count = 0;
        component_ids(g, mask_without(c), &count);
        if (count != 1) out.contracted = false;
    }
    return out;
}

bool represents_closed_3manifold(const ColouredGraph& g) {
    if (!g.connected()) return false;
    for (Colour missing = 0; missing < kColours; ++missing) {
        int count = 0;
        const auto comp = component_ids(g, mask_without(missing), &count);
        // chi = (#bicoloured cycles) - (#vertices)/2 per residue component.
        std::vector<long> chi2(count, 0);
        for (Vertex v = 0; v < g.order(); ++v) chi2[comp[v]] -= 1;
        for (ColourPair pair : all_colour_pairs()) {
            if (pair.contains(missing)) continue;
            for (const auto& cyc : bicoloured_cycles(g, pair)) chi2[comp[cyc.vertices.front()]] += 2;
        }
        for (long x : chi2) {
            if (x != 4) return false;
        }
    }
    return true;
}

EmbeddingSurface embedding_surface(const ColouredGraph& g, const PartitionPair& partition) {
    if (!g.connected()) throw GemError("embedding surface needs a connected graph");
    EmbeddingSurface s;
    s.partition = partition;
    for (ColourPair fam : partition.face_families()) {
        auto cycles = bicoloured_cycles(g, fam);
        s.faces.insert(s.faces.end(), std::make_move_iterator(cycles.begin()),
                       std::make_move_iterator(cycles.end()));
    }
    // V = n, E = 2n.
    s.euler_characteristic = static_cast<int>(s.faces.size()) - static_cast<int>(g.order());
    s.orientable = bipartition(g).has_value();
    s.genus = s.orientable ? (2 - s.euler_characteristic) / 2 : 2 - s.euler_characteristic;
    return s;
}

int regular_genus(const ColouredGraph& g) {
    int best = -1;
    for (const auto& part : all_partitions()) {
        const int genus = embedding_surface(g, part).genus;
        if (best < 0 || genus < best) best = genus;
    }
    return best;
}

bool is_crystallization(const ColouredGraph& g) {
    const auto cls = classify(g);
    return cls.connected && cls.contracted && represents_closed_3manifold(g);
}

}  // namespace lensgem
