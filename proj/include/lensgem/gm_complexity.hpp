#pragma once

#include <array>
#include <vector>

#include "lensgem/coloured_graph.hpp"
#include "lensgem/gem_io.hpp"

namespace lensgem {

struct LabelledCrystallization;

/// Regions of the embedding surface for `partition` once every first-pair
/// edge outside D and every second-pair edge outside D' has been cut.
/// Faces are listed family by family in PartitionPair::face_families()
/// order; regions are numbered by their lowest face id.
struct RegionDecomposition {
    PartitionPair partition;
    BicolouredCycle d;
    BicolouredCycle dprime;
    std::vector<BicolouredCycle> faces;
    std::vector<int> region_of_face;
    std::vector<std::vector<int>> regions;
    std::vector<std::vector<Vertex>> region_vertices;
};

/// Throws if d is not a first-pair cycle of g or dprime not a second-pair cycle.
RegionDecomposition region_decomposition(const ColouredGraph& g, const PartitionPair& partition,
                                         const BicolouredCycle& d, const BicolouredCycle& dprime);

struct GMWitness {
    PartitionPair partition;
    int d_id = 0;       ///< index among the first-pair cycles
    int dprime_id = 0;  ///< index among the second-pair cycles
    BicolouredCycle d;
    BicolouredCycle dprime;
    int region_id = 0;
    std::vector<int> region_faces;
    std::vector<BicolouredCycle> region_face_cycles;
    std::vector<Vertex> leftover;
    int score = 0;
};

struct GMResult {
    int value = 0;
    GMWitness witness;
    /// Minimum for each partition, in all_partitions() order.
    std::array<int, 3> per_partition{};
};

/// Exhaustive minimum over the three partitions, every D, D' and every region.
/// Ties are broken by (partition, D id, D' id, region id). Parallel over
/// (partition, D, D') triples; result independent of `jobs`.
GMResult gm_complexity(const ColouredGraph& g, int jobs = 0);

/// Reference path: one full region_decomposition per triple, set unions for scores.
GMResult gm_complexity_serial(const ColouredGraph& g);

/// Builds the witness for one fixed (partition, D, D', region) choice.
GMWitness make_witness(const ColouredGraph& g, const PartitionPair& partition, int d_id, int dprime_id,
                       int region_id);

/// The witness of the lens-space argument: partition {02|13}, D the
/// {0,2}-cycle through v_{1,1}, D' the {1,3}-cycle through v_{1,3}, and the
/// region holding the {2,3}-cycle through v_{s,4}.
GMWitness proof_witness_score(const LabelledGem& gem);
GMWitness proof_witness_score(const LabelledCrystallization& lc);

}  // namespace lensgem
