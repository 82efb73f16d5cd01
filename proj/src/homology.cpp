#include "lensgem/homology.hpp"

#include "lensgem/invariants.hpp"

namespace lensgem {

IntegerMatrix relation_matrix(const ColouredGraph& g, const PartitionPair& partition) {
    const auto side = bipartition(g);
    if (!side) throw GemError("relation matrix needs a bipartite graph");
    if (!classify(g).contracted) throw GemError("relation matrix needs a contracted graph");

    const auto generators = cycle_family(g, partition.first);
    const auto relators = bicoloured_cycles(g, partition.second);
    IntegerMatrix m(relators.size() - 1, generators.size() - 1);
    for (std::size_t r = 0; r + 1 < relators.size(); ++r) {
        for (Vertex v : relators[r].vertices) {
            const auto s = static_cast<std::size_t>(generators.cycle_of[v]);
            if (s + 1 < generators.size()) m(r, s) += (*side)[v] == 0 ? 1 : -1;
        }
    }
    return m;
}

AbelianGroup first_homology(const ColouredGraph& g) {
    if (!is_crystallization(g)) throw GemError("first homology needs a crystallization of a closed 3-manifold");
    AbelianGroup result;
    bool first = true;
    for (const auto& part : all_partitions()) {
        auto h = smith_normal_form(relation_matrix(g, part));
        if (first) {
            result = std::move(h);
            first = false;
        } else if (!(h == result)) {
            throw GemError("homology disagrees across partitions: " + to_string(result) + " vs " + to_string(h));
        }
    }
    return result;
}

}  // namespace lensgem
