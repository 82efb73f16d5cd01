#include "lensgem/canonical_code.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "lensgem/parallel.hpp"

namespace lensgem {

namespace {

using Perm = std::array<Colour, kColours>;

std::array<Perm, 24> colour_permutations() {
    std::array<Perm, 24> out{};
    Perm p{0, 1, 2, 3};
    std::size_t k = 0;
    do {
        out[k++] = p;
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

void append_number(std::string& s, std::size_t x) {
    char buf[24];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    s.append(buf, end);
}

/// Renders the candidate for start vertex `start` and colour order `perm`.
/// `numbering` and `order` are scratch buffers of size n.
void render_candidate(const ColouredGraph& g, Vertex start, const Perm& perm,
                      std::vector<Vertex>& numbering, std::vector<Vertex>& order, std::string& out) {
    const std::size_t n = g.order();
    constexpr Vertex unset = ~Vertex{0};
    std::fill(numbering.begin(), numbering.end(), unset);
    numbering[start] = 0;
    order[0] = start;
    std::size_t head = 0, tail = 1;
    while (head < tail) {
        const Vertex v = order[head++];
        for (Colour k = 0; k < kColours; ++k) {
            const Vertex w = g.neighbour(v, perm[k]);
            if (numbering[w] == unset) {
                numbering[w] = static_cast<Vertex>(tail);
                order[tail++] = w;
            }
        }
    }
    out.clear();
    append_number(out, n);
    for (Colour k = 0; k < kColours; ++k) {
        out.push_back('|');
        for (std::size_t i = 0; i < n; ++i) {
            if (i) out.push_back(',');
            append_number(out, numbering[g.neighbour(order[i], perm[k])]);
        }
    }
}

void best_for_start(const ColouredGraph& g, Vertex start, const std::array<Perm, 24>& perms,
                    std::vector<Vertex>& numbering, std::vector<Vertex>& order, std::string& scratch,
                    std::string& best) {
    for (const Perm& perm : perms) {
        render_candidate(g, start, perm, numbering, order, scratch);
        if (best.empty() || scratch < best) best = scratch;
    }
}

void require_connected(const ColouredGraph& g) {
    if (!g.connected()) throw GemError("canonical code requires a connected graph");
}

}  // namespace

GemCode canonical_code_serial(const ColouredGraph& g) {
    require_connected(g);
    const auto perms = colour_permutations();
    const std::size_t n = g.order();
    std::vector<Vertex> numbering(n), order(n);
    std::string scratch, best;
    for (Vertex s = 0; s < n; ++s) best_for_start(g, s, perms, numbering, order, scratch, best);
    return {best};
}

GemCode canonical_code(const ColouredGraph& g, int jobs) {
    require_connected(g);
    const int threads = resolve_jobs(jobs);
    if (threads == 1 || g.order() < 16) return canonical_code_serial(g);

    const auto perms = colour_permutations();
    const long n = static_cast<long>(g.order());
    std::string global;
#pragma omp parallel num_threads(threads)
    {
        std::vector<Vertex> numbering(n), order(n);
        std::string scratch, best;
#pragma omp for schedule(static)
        for (long s = 0; s < n; ++s) {
            best_for_start(g, static_cast<Vertex>(s), perms, numbering, order, scratch, best);
        }
#pragma omp critical(lensgem_code_min)
        {
            if (!best.empty() && (global.empty() || best < global)) global = std::move(best);
        }
    }
    return {global};
}

ColouredGraph graph_from_code(const GemCode& code) {
    std::istringstream in(code.text);
    std::string field;
    if (!std::getline(in, field, '|')) throw GemError("empty code");
    std::size_t n = 0;
    try {
        n = std::stoul(field);
    } catch (const std::exception&) {
        throw GemError("bad code header '" + field + "'");
    }
    ColouredGraph::Tables tables;
    for (Colour c = 0; c < kColours; ++c) {
        if (!std::getline(in, field, '|')) throw GemError("code has fewer than four tables");
        std::istringstream row(field);
        std::string item;
        while (std::getline(row, item, ',')) {
            try {
                tables[c].push_back(static_cast<Vertex>(std::stoul(item)));
            } catch (const std::exception&) {
                throw GemError("bad code entry '" + item + "'");
            }
        }
    }
    return ColouredGraph::from_involutions(n, std::move(tables));
}

}  // namespace lensgem
