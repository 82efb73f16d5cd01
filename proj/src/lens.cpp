#include "lensgem/lens.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

namespace lensgem {

LensParams normalize_lens(long p, long q) {
    if (p < 2) throw GemError("lens space degenerate or sphere: p = " + std::to_string(p) + " < 2");
    long r = q % p;
    if (r < 0) r += p;
    if (std::gcd(p, r) != 1) {
        throw GemError("gcd(p, q) = " + std::to_string(std::gcd(p, r)) + " for L(" + std::to_string(p) + "," +
                       std::to_string(q) + ")");
    }
    r = std::min(r, p - r);
    return {static_cast<int>(p), static_cast<int>(r)};
}

ContinuedFraction cf_expand(const LensParams& lp) {
    if (lp.p < 2 || lp.q < 1 || 2 * lp.q > lp.p || std::gcd(lp.p, lp.q) != 1) {
        throw GemError("lens parameters not normalized");
    }
    ContinuedFraction cf;
    // q/p = 1/(p/q): Euclid on (p, q).
    long num = lp.p, den = lp.q;
    while (den != 0) {
        cf.quotients.push_back(static_cast<int>(num / den));
        const long rem = num % den;
        num = den;
        den = rem;
    }
    if (cf.quotients.size() % 2 == 0) {
        if (cf.quotients.back() > 1) {
            --cf.quotients.back();
            cf.quotients.push_back(1);
        } else {
            cf.quotients.pop_back();
            ++cf.quotients.back();
        }
    }
    cf.sum = std::accumulate(cf.quotients.begin(), cf.quotients.end(), 0);
    return cf;
}

FourPlatDiagram plat_diagram(const ContinuedFraction& cf) {
    if (cf.quotients.empty() || cf.quotients.size() % 2 == 0) {
        throw GemError("plat diagram needs an odd-length continued fraction");
    }
    FourPlatDiagram d;
    for (std::size_t block = 0; block < cf.quotients.size(); ++block) {
        const auto type = (block % 2 == 0) ? CrossingType::Sigma2 : CrossingType::Sigma1Inv;
        d.crossings.insert(d.crossings.end(), cf.quotients[block], type);
    }
    const int s = d.crossing_count();

    // Nodes: 4 slots per crossing, then left caps L1..L4 and right caps R1..R4.
    const int left = 4 * s, right = 4 * s + 4;
    std::vector<std::pair<int, int>> edges;
    std::array<int, 5> pending{};
    for (int pos = 1; pos <= 4; ++pos) pending[pos] = left + pos - 1;
    for (int j = 0; j < s; ++j) {
        const int upper = d.crossings[j] == CrossingType::Sigma2 ? 2 : 1;
        const int lower = upper + 1;
        edges.emplace_back(pending[upper], 4 * j + static_cast<int>(Slot::InUpper));
        edges.emplace_back(pending[lower], 4 * j + static_cast<int>(Slot::InLower));
        pending[upper] = 4 * j + static_cast<int>(Slot::OutUpper);
        pending[lower] = 4 * j + static_cast<int>(Slot::OutLower);
    }
    for (int pos = 1; pos <= 4; ++pos) edges.emplace_back(pending[pos], right + pos - 1);
    edges.emplace_back(left + 0, left + 1);
    edges.emplace_back(left + 2, left + 3);
    edges.emplace_back(right + 0, right + 1);
    edges.emplace_back(right + 2, right + 3);

    std::vector<std::vector<int>> incident(4 * s + 8);
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        incident[edges[e].first].push_back(e);
        incident[edges[e].second].push_back(e);
    }
    auto slot_ref = [](int node) { return SlotRef{node / 4 + 1, static_cast<Slot>(node % 4)}; };

    std::vector<char> done(4 * s, 0);
    for (int start = 0; start < 4 * s; ++start) {
        if (done[start]) continue;
        int node = start, edge = incident[start].front();
        while (true) {
            const auto [a, b] = edges[edge];
            node = (a == node) ? b : a;
            if (node < 4 * s) break;
            edge = (incident[node][0] == edge) ? incident[node][1] : incident[node][0];
        }
        done[start] = done[node] = 1;
        d.arcs.push_back({slot_ref(start), slot_ref(node)});
    }
    return d;
}

std::string to_string(CrossingType t) { return t == CrossingType::Sigma2 ? "sigma2" : "sigma1^-1"; }

std::string to_string(Slot s) {
    switch (s) {
        case Slot::InUpper: return "in-upper";
        case Slot::InLower: return "in-lower";
        case Slot::OutUpper: return "out-upper";
        case Slot::OutLower: return "out-lower";
    }
    return "?";
}

void write_diagram(std::ostream& out, const FourPlatDiagram& d) {
    for (int j = 0; j < d.crossing_count(); ++j) out << "crossing " << j + 1 << ' ' << to_string(d.crossings[j]) << '\n';
    for (const auto& a : d.arcs) {
        out << "arc " << a.from.crossing << ' ' << to_string(a.from.slot) << ' ' << a.to.crossing << ' '
            << to_string(a.to.slot) << '\n';
    }
}

int corner_of(CrossingType type, Slot slot) {
    // The bridge (axis) strand owns corners 2 and 4; corners 1 and 2 share the
    // checkerboard region that the {0,2}-cycles trace.
    static constexpr int sigma2[4] = {2, 1, 3, 4};
    static constexpr int sigma1[4] = {3, 2, 4, 1};
    const int k = static_cast<int>(slot);
    return type == CrossingType::Sigma2 ? sigma2[k] : sigma1[k];
}

LabelledCrystallization ferri_crystallization(const LensParams& lp) {
    if (lp.p < 2) throw GemError("lens space degenerate or sphere: p < 2");
    LabelledCrystallization lc;
    lc.params = lp;
    lc.cf = cf_expand(lp);
    lc.diagram = plat_diagram(lc.cf);
    const int s = lc.diagram.crossing_count();
    const std::size_t n = 4 * static_cast<std::size_t>(s);

    ColouredGraph::Tables t;
    for (auto& row : t) row.assign(n, 0);
    auto join = [&t](Colour c, Vertex x, Vertex y) {
        t[c][x] = y;
        t[c][y] = x;
    };
    auto v = LabelledCrystallization::vertex;
    // Swaps corners 1 and 3 of each square, fixing the axis corners 2 and 4.
    auto mirror = [](Vertex x) -> Vertex {
        switch (x % 4) {
            case 0: return x + 2;
            case 2: return x - 2;
            default: return x;
        }
    };
    for (int j = 1; j <= s; ++j) {
        join(0, v(j, 1), v(j, 2));
        join(0, v(j, 3), v(j, 4));
        join(1, v(j, 2), v(j, 3));
        join(1, v(j, 4), v(j, 1));
    }
    for (const auto& arc : lc.diagram.arcs) {
        const Vertex x = v(arc.from.crossing, corner_of(lc.diagram.crossings[arc.from.crossing - 1], arc.from.slot));
        const Vertex y = v(arc.to.crossing, corner_of(lc.diagram.crossings[arc.to.crossing - 1], arc.to.slot));
        join(2, x, y);
        join(3, mirror(x), mirror(y));
    }
    lc.graph = ColouredGraph::from_involutions(n, std::move(t));
    for (int j = 1; j <= s; ++j) {
        for (int i = 1; i <= 4; ++i) lc.labels.push_back({v(j, i), j, i});
    }
    return lc;
}

bool colour_swap_symmetry(const LabelledCrystallization& lc) { return colour_swap_symmetry(lc.gem()); }

ProofIndexSets proof_index_sets(const LabelledCrystallization& lc) {
    if (lc.params.p < 3) throw GemError("witness index sets require p >= 3");
    const int s = lc.crossing_count();
    const auto& types = lc.diagram.crossings;
    auto v = LabelledCrystallization::vertex;
    ProofIndexSets out;
    for (int j = 2; j <= s - 1; ++j) {
        if (types[j - 1] == CrossingType::Sigma1Inv) out.i1.push_back(j);
    }
    out.i1.push_back(s);
    for (int j = 1; j <= s - 1; ++j) {
        if (types[j - 1] == CrossingType::Sigma2) out.i2.push_back(j);
    }

    for (int j : out.i1) {
        for (int i : {1, 3, 4}) out.d_union.push_back(v(j, i));
    }
    for (int i : {1, 2, 3}) out.d_union.push_back(v(1, i));
    for (int j : out.i2) {
        out.inner_12_cycle.push_back(v(j, 1));
        out.inner_12_cycle.push_back(v(j, 4));
        out.inner_03_cycle.push_back(v(j, 3));
        out.inner_03_cycle.push_back(v(j, 4));
    }
    out.inner_12_cycle.push_back(v(s, 1));
    out.inner_12_cycle.push_back(v(s, 4));
    out.inner_03_cycle.push_back(v(s, 3));
    out.inner_03_cycle.push_back(v(s, 4));
    out.fourth_string_cycle = {v(1, 1), v(1, 3), v(2, 2), v(s, 4)};
    for (int j = 3; j <= s - 1; ++j) out.leftover.push_back(v(j, 2));

    for (auto* set : {&out.d_union, &out.inner_12_cycle, &out.inner_03_cycle, &out.fourth_string_cycle,
                      &out.leftover}) {
        std::sort(set->begin(), set->end());
        set->erase(std::unique(set->begin(), set->end()), set->end());
    }
    return out;
}

}  // namespace lensgem
