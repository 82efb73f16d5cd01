#include "lensgem/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "lensgem/canonical_code.hpp"
#include "lensgem/catalogue.hpp"
#include "lensgem/gem_io.hpp"
#include "lensgem/gm_complexity.hpp"
#include "lensgem/homology.hpp"
#include "lensgem/invariants.hpp"
#include "lensgem/lens.hpp"
#include "lensgem/parallel.hpp"
#include "lensgem/survey.hpp"

namespace lensgem::cli {

namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
    long p = 0;
    long q = 0;
    std::string input;
    std::string output;
    std::string diagram;
    int p_max = 0;
    int max_order = 12;
    int jobs = 0;
    std::string format;
    bool witness = false;
};

std::string pair_name(ColourPair c) { return std::to_string(c.a) + std::to_string(c.b); }

std::string partition_name(const PartitionPair& p) { return pair_name(p.first) + "|" + pair_name(p.second); }

class VertexNames {
public:
    explicit VertexNames(const LabelledGem& gem) {
        for (const auto& l : gem.labels) names_[l.vertex] = "v" + std::to_string(l.crossing) + "," + std::to_string(l.corner);
    }
    [[nodiscard]] bool labelled() const { return !names_.empty(); }
    [[nodiscard]] std::string operator()(Vertex v) const {
        auto it = names_.find(v);
        return it == names_.end() ? std::to_string(v) : it->second;
    }

private:
    std::map<Vertex, std::string> names_;
};

Json cycle_json(const BicolouredCycle& c) {
    return Json{{"colours", pair_name(c.colours)}, {"vertices", c.vertices}};
}

void write_cycle(std::ostream& out, const char* tag, const BicolouredCycle& c) {
    out << tag << ' ' << pair_name(c.colours) << ':';
    for (Vertex v : c.vertices) out << ' ' << v;
    out << '\n';
}

int run_build(const RunConfig& cfg, std::ostream& out) {
    const auto lp = normalize_lens(cfg.p, cfg.q);
    const auto lc = ferri_crystallization(lp);
    if (cfg.output.empty()) {
        write_gem(out, lc.graph, lc.labels);
    } else {
        write_gem_file(cfg.output, lc.graph, lc.labels);
        out << "wrote " << cfg.output << " (L(" << lp.p << "," << lp.q << "), " << lc.graph.order()
            << " vertices)\n";
    }
    if (!cfg.diagram.empty()) {
        std::ofstream d(cfg.diagram);
        if (!d) throw GemError("cannot write '" + cfg.diagram + "'");
        write_diagram(d, lc.diagram);
    }
    return kOk;
}

int run_invariants(const RunConfig& cfg, std::ostream& out) {
    const auto gem = read_gem_file(cfg.input);
    const auto& g = gem.graph;
    const auto cls = classify(g);
    const bool manifold = represents_closed_3manifold(g);
    const auto res = residues(g);
    const bool crystal = is_crystallization(g);

    if (cfg.format == "json") {
        Json gj = Json::object();
        for (auto c : all_colour_pairs()) gj[pair_name(c)] = res.pair_counts[c.index()];
        Json j;
        j["order"] = g.order();
        j["bipartite"] = cls.bipartite;
        j["contracted"] = cls.contracted;
        j["manifold"] = manifold;
        j["g"] = gj;
        j["regular_genus"] = cls.connected ? Json(regular_genus(g)) : Json(nullptr);
        j["h1"] = crystal && cls.bipartite ? Json(to_string(first_homology(g))) : Json(nullptr);
        out << j.dump(2) << '\n';
        return kOk;
    }
    auto yes = [](bool b) { return b ? "true" : "false"; };
    out << "order " << g.order() << '\n'
        << "bipartite " << yes(cls.bipartite) << '\n'
        << "contracted " << yes(cls.contracted) << '\n'
        << "manifold " << yes(manifold) << '\n'
        << "g";
    for (auto c : all_colour_pairs()) out << ' ' << pair_name(c) << '=' << res.pair_counts[c.index()];
    out << '\n' << "regular_genus ";
    if (cls.connected) out << regular_genus(g);
    else out << "n/a";
    out << '\n' << "h1 " << (crystal && cls.bipartite ? to_string(first_homology(g)) : "n/a") << '\n';
    return kOk;
}

int run_gm(const RunConfig& cfg, std::ostream& out) {
    const auto gem = read_gem_file(cfg.input);
    if (!is_crystallization(gem.graph)) throw GemError("'" + cfg.input + "' is not a crystallization");
    const auto result = gm_complexity(gem.graph, cfg.jobs);
    const auto& w = result.witness;
    const VertexNames name(gem);

    if (cfg.format == "json") {
        Json j;
        j["gm"] = result.value;
        if (cfg.witness) {
            Json faces = Json::array();
            for (const auto& f : w.region_face_cycles) faces.push_back(cycle_json(f));
            Json left = Json::array();
            for (Vertex v : w.leftover) left.push_back(name(v));
            j["gm_witness"] = Json{{"partition", partition_name(w.partition)},
                                   {"d", cycle_json(w.d)},
                                   {"dprime", cycle_json(w.dprime)},
                                   {"region", w.region_id},
                                   {"faces", faces},
                                   {"leftover", left},
                                   {"score", w.score}};
        }
        out << j.dump(2) << '\n';
        return kOk;
    }
    out << "gm " << result.value << '\n';
    if (cfg.witness) {
        out << "partition " << partition_name(w.partition) << '\n';
        write_cycle(out, "d", w.d);
        write_cycle(out, "dprime", w.dprime);
        out << "region " << w.region_id << '\n';
        for (const auto& f : w.region_face_cycles) write_cycle(out, "face", f);
        out << "leftover";
        for (Vertex v : w.leftover) out << ' ' << name(v);
        out << '\n' << "score " << w.score << '\n';
    }
    return kOk;
}

int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto rows = survey_lens_range(cfg.p_max, cfg.jobs);
    const auto failure = survey_failure(rows);
    if (cfg.format == "text") {
        const auto sharp = std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.sharp_forced; });
        out << "rows " << rows.size() << '\n' << "sharp " << sharp << '\n';
        out << (failure ? "FAILED" : "ok") << '\n';
    } else {
        write_survey_csv(out, rows);
    }
    if (failure) {
        err << "verification failed: " << *failure << '\n';
        return kVerificationFailed;
    }
    return kOk;
}

int run_catalogue(const RunConfig& cfg, std::ostream& out) {
    const auto entries = enumerate_crystallizations(cfg.max_order, cfg.jobs);
    write_catalogue(cfg.output, entries);
    std::map<int, int> by_order;
    for (const auto& e : entries) ++by_order[e.order];
    out << "entries " << entries.size() << '\n';
    for (auto [order, count] : by_order) out << "order " << order << ' ' << count << '\n';
    return kOk;
}

int run_code(const RunConfig& cfg, std::ostream& out) {
    const auto gem = read_gem_file(cfg.input);
    out << canonical_code(gem.graph, cfg.jobs).text << '\n';
    return kOk;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    cfg.jobs = resolve_jobs(0);

    CLI::App app{"Crystallizations of lens spaces and gem invariants", "lensgem"};
    app.require_subcommand(1);

    auto* build = app.add_subcommand("build", "Labelled crystallization of L(p,q) as a gem file");
    build->add_option("p", cfg.p)->required();
    build->add_option("q", cfg.q)->required();
    build->add_option("--out", cfg.output, "Output gem file (stdout if absent)");
    build->add_option("--diagram", cfg.diagram, "Also write the 4-plat diagram");

    auto* inv = app.add_subcommand("invariants", "Residues, flags, regular genus and H1");
    inv->add_option("file", cfg.input)->required();
    inv->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}))->default_val("text");

    auto* gm = app.add_subcommand("gm", "GM-complexity by exhaustive search");
    gm->add_option("file", cfg.input)->required();
    gm->add_flag("--witness", cfg.witness);
    gm->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}))->default_val("text");
    gm->add_option("--jobs", cfg.jobs)->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "Lens-space survey for 2 <= p <= P");
    verify->add_option("--pmax", cfg.p_max)->required()->check(CLI::Range(2, 100000));
    verify->add_option("--jobs", cfg.jobs)->check(CLI::PositiveNumber);
    verify->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "text"}))->default_val("csv");

    auto* cat = app.add_subcommand("catalogue", "Census of crystallizations up to an order");
    cat->add_option("--max-order", cfg.max_order)->default_val(12);
    cat->add_option("--out", cfg.output)->required();
    cat->add_option("--jobs", cfg.jobs)->check(CLI::PositiveNumber);

    auto* code = app.add_subcommand("code", "Canonical code of a gem file");
    code->add_option("file", cfg.input)->required();
    code->add_option("--jobs", cfg.jobs)->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kInputError;
    }

    try {
        if (build->parsed()) return run_build(cfg, out);
        if (inv->parsed()) return run_invariants(cfg, out);
        if (gm->parsed()) return run_gm(cfg, out);
        if (verify->parsed()) return run_verify(cfg, out, err);
        if (cat->parsed()) return run_catalogue(cfg, out);
        if (code->parsed()) return run_code(cfg, out);
    } catch (const GemError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    err << app.help();
    return kInputError;
}

}  // namespace lensgem::cli
