#pragma once

#include "lensgem/coloured_graph.hpp"
#include "lensgem/smith.hpp"

namespace lensgem {

/// Abelianized crystallization presentation of pi_1 for one partition:
/// generators are the first-pair cycles but the last, relators the
/// second-pair cycles but the last. Entry (r, s) counts the visits of relator
/// r to generator s, +1 for bipartition class 0 and -1 for class 1.
IntegerMatrix relation_matrix(const ColouredGraph& g, const PartitionPair& partition);

/// H_1 of the represented manifold, computed on all three partitions; throws
/// if they disagree.
AbelianGroup first_homology(const ColouredGraph& g);

}  // namespace lensgem
