#include "lensgem/catalogue.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <set>
#include <numeric>
#include <sstream>

#include "lensgem/gem_io.hpp"
#include "lensgem/gm_complexity.hpp"
#include "lensgem/homology.hpp"
#include "lensgem/invariants.hpp"
#include "lensgem/parallel.hpp"

namespace lensgem {

namespace {

using Perm = std::vector<int>;

int cycle_count(const Perm& p) {
    const int m = static_cast<int>(p.size());
    std::vector<char> seen(m, 0);
    int cycles = 0;
    for (int i = 0; i < m; ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (int x = i; !seen[x]; x = p[x]) seen[x] = 1;
    }
    return cycles;
}

/// a^{-1} b as a permutation of the black vertices.
Perm relative(const Perm& a, const Perm& b) {
    const int m = static_cast<int>(a.size());
    Perm a_inv(m), comp(m);
    for (int i = 0; i < m; ++i) a_inv[a[i]] = i;
    for (int i = 0; i < m; ++i) comp[i] = a_inv[b[i]];
    return comp;
}

/// Number of {a,b}-cycles when both colours map black to white.
int mixed_cycle_count(const Perm& a, const Perm& b) { return cycle_count(relative(a, b)); }

/// The perms generate a transitive group on the black vertices.
bool transitive(std::initializer_list<const Perm*> perms, int m) {
    std::vector<char> seen(m, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    std::vector<Perm> inverses;
    for (const Perm* p : perms) {
        Perm inv(m);
        for (int i = 0; i < m; ++i) inv[(*p)[i]] = i;
        inverses.push_back(std::move(inv));
    }
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        auto visit = [&](int y) {
            if (!seen[y]) {
                seen[y] = 1;
                ++reached;
                stack.push_back(y);
            }
        };
        for (const Perm* p : perms) visit((*p)[x]);
        for (const auto& inv : inverses) visit(inv[x]);
    }
    return reached == m;
}

/// Colour-0 matching plus one black-to-white bijection per colour.
bool residue_is_sphere(const Perm& identity, const Perm& a, const Perm& b, int m) {
    if (!transitive({&a, &b}, m)) return false;
    return mixed_cycle_count(identity, a) + mixed_cycle_count(identity, b) + mixed_cycle_count(a, b) == m + 2;
}

ColouredGraph assemble(int m, const Perm& s1, const Perm& s2, const Perm& s3) {
    const std::size_t n = 2 * static_cast<std::size_t>(m);
    ColouredGraph::Tables t;
    for (auto& row : t) row.assign(n, 0);
    const Perm* perms[3] = {&s1, &s2, &s3};
    for (int i = 0; i < m; ++i) {
        t[0][i] = m + i;
        t[0][m + i] = i;
        for (int c = 1; c < 4; ++c) {
            const int w = m + (*perms[c - 1])[i];
            t[c][i] = w;
            t[c][w] = i;
        }
    }
    return ColouredGraph::from_involutions(n, std::move(t));
}

/// Depth-first enumeration of all bijections of {0..m-1}.
void for_each_bijection(int m, const std::function<void(const Perm&)>& visit) {
    Perm p(m);
    std::vector<char> used(m, 0);
    std::function<void(int)> extend = [&](int pos) {
        if (pos == m) {
            visit(p);
            return;
        }
        for (int v = 0; v < m; ++v) {
            if (used[v]) continue;
            used[v] = 1;
            p[pos] = v;
            extend(pos + 1);
            used[v] = 0;
        }
    };
    extend(0);
}

/// One representative permutation per cycle type of S_m.
std::vector<Perm> cycle_type_representatives(int m) {
    std::vector<Perm> reps;
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            Perm p(m);
            int start = 0;
            for (int len : parts) {
                for (int k = 0; k < len; ++k) p[start + k] = start + (k + 1) % len;
                start += len;
            }
            reps.push_back(std::move(p));
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            parts.push_back(part);
            rec(remaining - part, part);
            parts.pop_back();
        }
    };
    rec(m, m);
    return reps;
}

struct Branch {
    int m;
    Perm s1;
    Perm s2;
};

/// Top-level branches: colour 1 fixed to a cycle-type representative with the
/// most {0,c}-cycles among c = 1,2,3, colour 2 any bijection whose
/// {0,1,2}-residue is a sphere.
std::vector<Branch> top_level_branches(int max_order) {
    std::vector<Branch> out;
    for (int m = 1; 2 * m <= max_order; ++m) {
        Perm identity(m);
        std::iota(identity.begin(), identity.end(), 0);
        for (const auto& s1 : cycle_type_representatives(m)) {
            const int g01 = cycle_count(s1);
            for_each_bijection(m, [&](const Perm& s2) {
                if (cycle_count(s2) > g01) return;
                if (!residue_is_sphere(identity, s1, s2, m)) return;
                out.push_back({m, s1, s2});
            });
        }
    }
    return out;
}

/// Completes one branch with every admissible colour-3 bijection.
void expand_branch(const Branch& b, std::set<std::string>& found) {
    const int m = b.m;
    Perm identity(m);
    std::iota(identity.begin(), identity.end(), 0);
    const int g01 = cycle_count(b.s1);
    for_each_bijection(m, [&](const Perm& s3) {
        if (cycle_count(s3) > g01) return;
        if (!residue_is_sphere(identity, b.s1, s3, m)) return;
        if (!residue_is_sphere(identity, b.s2, s3, m)) return;
        // {1,2,3}-residue: black-to-black moves s1^-1 s2 and s1^-1 s3.
        const Perm m12 = relative(b.s1, b.s2), m13 = relative(b.s1, s3);
        if (!transitive({&m12, &m13}, m)) return;
        if (mixed_cycle_count(b.s1, b.s2) + mixed_cycle_count(b.s1, s3) + mixed_cycle_count(b.s2, s3) != m + 2) {
            return;
        }
        const auto g = assemble(m, b.s1, b.s2, s3);
        if (!is_crystallization(g)) return;
        auto code = canonical_code_serial(g);
        found.insert(std::move(code.text));
    });
}

// Invariants are taken from the code's own numbering so that they are
// reproducible from the index line alone.
CatalogueEntry describe(const std::string& code) {
    const auto g = graph_from_code(GemCode{code});
    CatalogueEntry e{GemCode{code}, static_cast<int>(g.order()), residues(g).pair_counts, regular_genus(g),
                     first_homology(g), gm_complexity(g, 1).value, g};
    return e;
}

}  // namespace

std::vector<CatalogueEntry> enumerate_crystallizations_serial(int max_order) {
    if (max_order < 2 || max_order % 2 != 0) throw GemError("max order must be even and >= 2");
    std::set<std::string> found;
    for (const auto& b : top_level_branches(max_order)) expand_branch(b, found);
    std::vector<CatalogueEntry> out;
    for (const auto& code : found) out.push_back(describe(code));
    return out;
}

std::vector<CatalogueEntry> enumerate_crystallizations(int max_order, int jobs) {
    if (max_order < 2 || max_order % 2 != 0) throw GemError("max order must be even and >= 2");
    const auto branches = top_level_branches(max_order);
    const int threads = resolve_jobs(jobs);
    const long nb = static_cast<long>(branches.size());

    std::set<std::string> found;
#pragma omp parallel num_threads(threads)
    {
        std::set<std::string> local;
#pragma omp for schedule(dynamic, 1)
        for (long i = 0; i < nb; ++i) expand_branch(branches[i], local);
#pragma omp critical(lensgem_catalogue_merge)
        found.merge(local);
    }

    const std::vector<std::string> items(found.begin(), found.end());
    std::vector<CatalogueEntry> out(items.size());
    const long ni = static_cast<long>(items.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (long i = 0; i < ni; ++i) out[i] = describe(items[i]);
    return out;
}

std::string index_line(const CatalogueEntry& e) {
    std::string h1 = to_string(e.h1);
    h1.erase(std::remove(h1.begin(), h1.end(), ' '), h1.end());
    std::ostringstream out;
    out << e.code.text << ' ' << e.order << ' ' << e.g[0] << ' ' << e.g[1] << ' ' << e.g[2] << ' '
        << e.regular_genus << ' ' << h1 << ' ' << e.gm;
    return out.str();
}

void write_catalogue(const std::string& dir, const std::vector<CatalogueEntry>& entries) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw GemError("cannot create '" + dir + "': " + ec.message());
    std::ofstream index(fs::path(dir) / "index.txt");
    if (!index) throw GemError("cannot write index in '" + dir + "'");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        std::ostringstream name;
        name << "entry_" << std::setw(4) << std::setfill('0') << i + 1 << ".gem";
        write_gem_file((fs::path(dir) / name.str()).string(), entries[i].graph);
        index << index_line(entries[i]) << '\n';
    }
}

}  // namespace lensgem
