#include "lensgem/gem_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace lensgem {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
    throw GemError("gem line " + std::to_string(line) + ": " + what);
}

long parse_long(const std::string& tok, int line) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(tok, &used);
    } catch (const std::exception&) {
        fail(line, "expected integer, got '" + tok + "'");
    }
    if (used != tok.size()) fail(line, "expected integer, got '" + tok + "'");
    return v;
}

}  // namespace

Vertex LabelledGem::vertex(int crossing, int corner) const {
    for (const auto& l : labels) {
        if (l.crossing == crossing && l.corner == corner) return l.vertex;
    }
    throw GemError("missing label v_{" + std::to_string(crossing) + "," + std::to_string(corner) + "}");
}

std::optional<int> LabelledGem::complete_crossing_count() const {
    const std::size_t n = graph.order();
    if (n % 4 != 0 || labels.size() != n) return std::nullopt;
    const int s = static_cast<int>(n / 4);
    std::vector<char> vertex_seen(n, 0), label_seen(n, 0);
    for (const auto& l : labels) {
        if (l.vertex >= n || l.crossing < 1 || l.crossing > s || l.corner < 1 || l.corner > 4) {
            return std::nullopt;
        }
        const std::size_t slot = 4 * static_cast<std::size_t>(l.crossing - 1) + (l.corner - 1);
        if (vertex_seen[l.vertex] || label_seen[slot]) return std::nullopt;
        vertex_seen[l.vertex] = label_seen[slot] = 1;
    }
    return s;
}

LabelledGem parse_gem(std::istream& in) {
    std::string text;
    int lineno = 0;
    std::size_t n = 0;
    bool have_header = false;
    ColouredGraph::Tables tables;
    int colours_read = 0;
    std::vector<VertexLabel> labels;

    while (std::getline(in, text)) {
        ++lineno;
        if (!text.empty() && text.back() == '\r') text.pop_back();
        if (text.empty()) continue;
        std::istringstream ls(text);
        std::string head;
        ls >> head;
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) toks.push_back(t);

        if (!have_header) {
            if (head != "gem" || toks.size() != 1) fail(lineno, "expected 'gem <n>'");
            const long v = parse_long(toks[0], lineno);
            if (v <= 0) fail(lineno, "order must be positive");
            n = static_cast<std::size_t>(v);
            have_header = true;
            continue;
        }
        if (colours_read < kColours) {
            const std::string want = "c" + std::to_string(colours_read) + ":";
            if (head != want) fail(lineno, "expected '" + want + "'");
            if (toks.size() != n) fail(lineno, "expected " + std::to_string(n) + " entries");
            for (const auto& t : toks) {
                const long v = parse_long(t, lineno);
                if (v < 0) fail(lineno, "negative vertex index");
                tables[colours_read].push_back(static_cast<Vertex>(v));
            }
            ++colours_read;
            continue;
        }
        if (head != "label" || toks.size() != 3) fail(lineno, "expected 'label <vertex> <j> <i>'");
        const long v = parse_long(toks[0], lineno);
        const long j = parse_long(toks[1], lineno);
        const long i = parse_long(toks[2], lineno);
        if (v < 0 || static_cast<std::size_t>(v) >= n) fail(lineno, "label vertex out of range");
        if (j < 1 || i < 1 || i > 4) fail(lineno, "label must be v_{j,i} with j >= 1, 1 <= i <= 4");
        labels.push_back({static_cast<Vertex>(v), static_cast<int>(j), static_cast<int>(i)});
    }
    if (!have_header) throw GemError("gem: missing header");
    if (colours_read != kColours) throw GemError("gem: expected four colour lines");
    return {ColouredGraph::from_involutions(n, std::move(tables)), std::move(labels)};
}

LabelledGem parse_gem(const std::string& text) {
    std::istringstream in(text);
    return parse_gem(in);
}

void write_gem(std::ostream& out, const ColouredGraph& g, const std::vector<VertexLabel>& labels) {
    out << "gem " << g.order() << '\n';
    for (Colour c = 0; c < kColours; ++c) {
        out << 'c' << c << ':';
        for (Vertex v : g.involution(c)) out << ' ' << v;
        out << '\n';
    }
    for (const auto& l : labels) out << "label " << l.vertex << ' ' << l.crossing << ' ' << l.corner << '\n';
}

std::string format_gem(const ColouredGraph& g, const std::vector<VertexLabel>& labels) {
    std::ostringstream out;
    write_gem(out, g, labels);
    return out.str();
}

LabelledGem read_gem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GemError("cannot open '" + path + "'");
    return parse_gem(in);
}

void write_gem_file(const std::string& path, const ColouredGraph& g, const std::vector<VertexLabel>& labels) {
    std::ofstream out(path);
    if (!out) throw GemError("cannot write '" + path + "'");
    write_gem(out, g, labels);
}

bool colour_swap_symmetry(const LabelledGem& gem) {
    const auto s = gem.complete_crossing_count();
    if (!s) throw GemError("2-symmetry check needs a complete v_{j,i} labelling");
    const auto& g = gem.graph;
    std::vector<Vertex> mirror(g.order());
    for (const auto& l : gem.labels) {
        const int image = (l.corner == 1) ? 3 : (l.corner == 3) ? 1 : l.corner;
        mirror[l.vertex] = gem.vertex(l.crossing, image);
    }
    static constexpr Colour swap[kColours] = {1, 0, 3, 2};
    for (Vertex v = 0; v < g.order(); ++v) {
        for (Colour c = 0; c < kColours; ++c) {
            if (mirror[g.neighbour(v, c)] != g.neighbour(mirror[v], swap[c])) return false;
        }
    }
    return true;
}

}  // namespace lensgem
