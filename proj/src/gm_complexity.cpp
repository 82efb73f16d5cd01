#include "lensgem/gm_complexity.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <tuple>

#include "lensgem/invariants.hpp"
#include "lensgem/lens.hpp"
#include "lensgem/parallel.hpp"

namespace lensgem {

namespace {

/// Faces of one partition's embedding plus lookups for the search.
struct SurfaceData {
    PartitionPair partition;
    CycleFamily first;
    CycleFamily second;
    std::array<ColourPair, 4> families;
    std::vector<BicolouredCycle> faces;
    /// face_of[k][v]: global id of the family-k face through v.
    std::array<std::vector<int>, 4> face_of;

    SurfaceData(const ColouredGraph& g, const PartitionPair& p)
        : partition(p), first(cycle_family(g, p.first)), second(cycle_family(g, p.second)),
          families(p.face_families()) {
        for (int k = 0; k < 4; ++k) {
            auto fam = cycle_family(g, families[k]);
            const int offset = static_cast<int>(faces.size());
            face_of[k].resize(g.order());
            for (Vertex v = 0; v < g.order(); ++v) face_of[k][v] = offset + fam.cycle_of[v];
            for (auto& c : fam.cycles) faces.push_back(std::move(c));
        }
    }

    /// The two face families bordering an edge of colour c.
    [[nodiscard]] std::pair<int, int> families_of(Colour c) const {
        int found[2] = {-1, -1}, k = 0;
        for (int f = 0; f < 4; ++f) {
            if (families[f].contains(c)) found[k++] = f;
        }
        return {found[0], found[1]};
    }
};

/// Union-find whose roots are always the least element of their set.
class MinRootDsu {
public:
    explicit MinRootDsu(std::size_t n) : parent_(n) { reset(); }
    void reset() { std::iota(parent_.begin(), parent_.end(), 0); }
    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a < b) parent_[b] = a;
        else parent_[a] = b;
    }

private:
    std::vector<int> parent_;
};

/// Merges faces across the edges of D (first-pair colours) and D' (second-pair colours).
void merge_kept_edges(const SurfaceData& s, const BicolouredCycle& d, const BicolouredCycle& dprime,
                      MinRootDsu& dsu) {
    for (const auto* cyc : {&d, &dprime}) {
        for (Colour c : {cyc->colours.a, cyc->colours.b}) {
            const auto [f0, f1] = s.families_of(c);
            for (Vertex v : cyc->vertices) dsu.unite(s.face_of[f0][v], s.face_of[f1][v]);
        }
    }
}

void require_crystallization(const ColouredGraph& g) {
    if (!is_crystallization(g)) throw GemError("GM-complexity needs a crystallization of a closed 3-manifold");
}

/// Search key; lexicographic order is the tie-break.
struct Candidate {
    int score = std::numeric_limits<int>::max();
    int partition = 0;
    int d = 0;
    int dprime = 0;
    int region = 0;

    [[nodiscard]] auto key() const { return std::tie(score, partition, d, dprime, region); }
    bool operator<(const Candidate& o) const { return key() < o.key(); }
};

struct PartitionScratch {
    MinRootDsu dsu;
    std::vector<int> count;
    std::vector<char> covered;

    PartitionScratch(std::size_t faces, std::size_t n) : dsu(faces), count(faces, 0), covered(n, 0) {}
};

/// Best region for one (D, D') choice of partition `s`.
Candidate score_pair(const SurfaceData& s, int pidx, int d, int dp, std::size_t n, PartitionScratch& w) {
    const auto& dc = s.first.cycles[d];
    const auto& dpc = s.second.cycles[dp];
    w.dsu.reset();
    merge_kept_edges(s, dc, dpc, w.dsu);

    int covered = 0;
    for (const auto* cyc : {&dc, &dpc}) {
        for (Vertex v : cyc->vertices) {
            if (!w.covered[v]) {
                w.covered[v] = 1;
                ++covered;
            }
        }
    }
    std::fill(w.count.begin(), w.count.end(), 0);
    int best_count = 0, best_root = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (w.covered[v]) continue;
        int roots[4];
        int k = 0;
        for (int f = 0; f < 4; ++f) {
            const int r = w.dsu.find(s.face_of[f][v]);
            if (std::find(roots, roots + k, r) == roots + k) roots[k++] = r;
        }
        for (int i = 0; i < k; ++i) {
            const int c = ++w.count[roots[i]];
            if (c > best_count || (c == best_count && roots[i] < best_root)) {
                best_count = c;
                best_root = roots[i];
            }
        }
    }
    for (const auto* cyc : {&dc, &dpc}) {
        for (Vertex v : cyc->vertices) w.covered[v] = 0;
    }
    // Region id = rank of its root among all roots.
    int region_id = 0;
    for (int f = 0; f < best_root; ++f) {
        if (w.dsu.find(f) == f) ++region_id;
    }
    return {static_cast<int>(n) - covered - best_count, pidx, d, dp, region_id};
}

int find_cycle_id(const CycleFamily& fam, const BicolouredCycle& cyc) {
    if (cyc.colours != fam.colours || cyc.vertices.empty()) return -1;
    const Vertex v0 = cyc.vertices.front();
    if (v0 >= fam.cycle_of.size()) return -1;
    const int id = fam.cycle_of[v0];
    auto a = fam.cycles[id].vertices;
    auto b = cyc.vertices;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b ? id : -1;
}

}  // namespace

RegionDecomposition region_decomposition(const ColouredGraph& g, const PartitionPair& partition,
                                         const BicolouredCycle& d, const BicolouredCycle& dprime) {
    const SurfaceData s(g, partition);
    const int did = find_cycle_id(s.first, d);
    if (did < 0) throw GemError("D is not a cycle of the first colour pair of the partition");
    const int dpid = find_cycle_id(s.second, dprime);
    if (dpid < 0) throw GemError("D' is not a cycle of the second colour pair of the partition");

    RegionDecomposition rd;
    rd.partition = partition;
    rd.d = s.first.cycles[did];
    rd.dprime = s.second.cycles[dpid];
    rd.faces = s.faces;

    MinRootDsu dsu(s.faces.size());
    merge_kept_edges(s, rd.d, rd.dprime, dsu);
    std::vector<int> region_of_root(s.faces.size(), -1);
    rd.region_of_face.resize(s.faces.size());
    for (int f = 0; f < static_cast<int>(s.faces.size()); ++f) {
        const int r = dsu.find(f);
        if (region_of_root[r] < 0) {
            region_of_root[r] = static_cast<int>(rd.regions.size());
            rd.regions.emplace_back();
            rd.region_vertices.emplace_back();
        }
        const int id = region_of_root[r];
        rd.region_of_face[f] = id;
        rd.regions[id].push_back(f);
        auto& verts = rd.region_vertices[id];
        verts.insert(verts.end(), s.faces[f].vertices.begin(), s.faces[f].vertices.end());
    }
    for (auto& verts : rd.region_vertices) {
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    }
    return rd;
}

GMWitness make_witness(const ColouredGraph& g, const PartitionPair& partition, int d_id, int dprime_id,
                       int region_id) {
    const auto first = bicoloured_cycles(g, partition.first);
    const auto second = bicoloured_cycles(g, partition.second);
    if (d_id < 0 || d_id >= static_cast<int>(first.size()) || dprime_id < 0 ||
        dprime_id >= static_cast<int>(second.size())) {
        throw GemError("cycle id out of range");
    }
    const auto rd = region_decomposition(g, partition, first[d_id], second[dprime_id]);
    if (region_id < 0 || region_id >= static_cast<int>(rd.regions.size())) throw GemError("region id out of range");

    GMWitness w;
    w.partition = partition;
    w.d_id = d_id;
    w.dprime_id = dprime_id;
    w.d = rd.d;
    w.dprime = rd.dprime;
    w.region_id = region_id;
    w.region_faces = rd.regions[region_id];
    for (int f : w.region_faces) w.region_face_cycles.push_back(rd.faces[f]);

    std::vector<char> covered(g.order(), 0);
    for (const auto* cyc : {&rd.d, &rd.dprime}) {
        for (Vertex v : cyc->vertices) covered[v] = 1;
    }
    for (Vertex v : rd.region_vertices[region_id]) covered[v] = 1;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!covered[v]) w.leftover.push_back(v);
    }
    w.score = static_cast<int>(w.leftover.size());
    return w;
}

GMResult gm_complexity_serial(const ColouredGraph& g) {
    require_crystallization(g);
    GMResult out;
    Candidate best;
    const auto parts = all_partitions();
    for (int pi = 0; pi < 3; ++pi) {
        const auto first = bicoloured_cycles(g, parts[pi].first);
        const auto second = bicoloured_cycles(g, parts[pi].second);
        int part_best = std::numeric_limits<int>::max();
        for (int d = 0; d < static_cast<int>(first.size()); ++d) {
            for (int dp = 0; dp < static_cast<int>(second.size()); ++dp) {
                const auto rd = region_decomposition(g, parts[pi], first[d], second[dp]);
                std::vector<Vertex> cov = first[d].vertices;
                cov.insert(cov.end(), second[dp].vertices.begin(), second[dp].vertices.end());
                std::sort(cov.begin(), cov.end());
                cov.erase(std::unique(cov.begin(), cov.end()), cov.end());
                for (int r = 0; r < static_cast<int>(rd.regions.size()); ++r) {
                    std::vector<Vertex> all;
                    std::set_union(cov.begin(), cov.end(), rd.region_vertices[r].begin(),
                                   rd.region_vertices[r].end(), std::back_inserter(all));
                    const Candidate c{static_cast<int>(g.order() - all.size()), pi, d, dp, r};
                    part_best = std::min(part_best, c.score);
                    if (c < best) best = c;
                }
            }
        }
        out.per_partition[pi] = part_best;
    }
    out.value = best.score;
    out.witness = make_witness(g, parts[best.partition], best.d, best.dprime, best.region);
    return out;
}

GMResult gm_complexity(const ColouredGraph& g, int jobs) {
    require_crystallization(g);
    const auto parts = all_partitions();
    std::vector<SurfaceData> surfaces;
    surfaces.reserve(3);
    for (const auto& p : parts) surfaces.emplace_back(g, p);

    // Flattened (partition, D, D') index space.
    std::array<long, 4> offsets{};
    for (int pi = 0; pi < 3; ++pi) {
        offsets[pi + 1] = offsets[pi] + static_cast<long>(surfaces[pi].first.size() * surfaces[pi].second.size());
    }
    const long total = offsets[3];
    const std::size_t n = g.order();
    const int threads = resolve_jobs(jobs);

    Candidate best;
    std::array<int, 3> per_partition;
    per_partition.fill(std::numeric_limits<int>::max());

#pragma omp parallel num_threads(threads)
    {
        std::vector<PartitionScratch> scratch;
        for (const auto& s : surfaces) scratch.emplace_back(s.faces.size(), n);
        Candidate local;
        std::array<int, 3> local_part;
        local_part.fill(std::numeric_limits<int>::max());

#pragma omp for schedule(dynamic, 16)
        for (long idx = 0; idx < total; ++idx) {
            const int pi = idx < offsets[1] ? 0 : (idx < offsets[2] ? 1 : 2);
            const long rel = idx - offsets[pi];
            const auto width = static_cast<long>(surfaces[pi].second.size());
            const Candidate c = score_pair(surfaces[pi], pi, static_cast<int>(rel / width),
                                           static_cast<int>(rel % width), n, scratch[pi]);
            local_part[pi] = std::min(local_part[pi], c.score);
            if (c < local) local = c;
        }
#pragma omp critical(lensgem_gm_min)
        {
            if (local < best) best = local;
            for (int pi = 0; pi < 3; ++pi) per_partition[pi] = std::min(per_partition[pi], local_part[pi]);
        }
    }

    GMResult out;
    out.value = best.score;
    out.per_partition = per_partition;
    out.witness = make_witness(g, parts[best.partition], best.d, best.dprime, best.region);
    return out;
}

GMWitness proof_witness_score(const LabelledGem& gem) {
    const auto s = gem.complete_crossing_count();
    if (!s) throw GemError("proof witness needs a complete v_{j,i} labelling");
    if (*s < 3) throw GemError("proof witness requires p >= 3");
    const auto& g = gem.graph;
    const PartitionPair part{ColourPair{0, 2}};
    const auto first = cycle_family(g, part.first);
    const auto second = cycle_family(g, part.second);
    const int d = first.cycle_of[gem.vertex(1, 1)];
    const int dp = second.cycle_of[gem.vertex(1, 3)];
    const auto rd = region_decomposition(g, part, first.cycles[d], second.cycles[dp]);

    // The {2,3} family is the third face family of {02|13}.
    const auto fourth = cycle_family(g, ColourPair{2, 3});
    const auto& target = fourth.cycles[fourth.cycle_of[gem.vertex(*s, 4)]];
    for (int f = 0; f < static_cast<int>(rd.faces.size()); ++f) {
        if (rd.faces[f] == target) return make_witness(g, part, d, dp, rd.region_of_face[f]);
    }
    throw GemError("fourth-string face not found");
}

GMWitness proof_witness_score(const LabelledCrystallization& lc) {
    if (lc.params.p < 3) throw GemError("proof witness requires p >= 3");
    return proof_witness_score(lc.gem());
}

}  // namespace lensgem
