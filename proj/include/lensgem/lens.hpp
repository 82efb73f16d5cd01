#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lensgem/coloured_graph.hpp"
#include "lensgem/gem_io.hpp"

namespace lensgem {

/// Lens space parameters normalized to gcd(p,q) = 1, 1 <= q <= p/2.
struct LensParams {
    int p = 2;
    int q = 1;

    friend bool operator==(const LensParams&, const LensParams&) = default;
};

/// Reduces q mod p and reflects it into [1, p/2].
LensParams normalize_lens(long p, long q);

/// Partial quotients of q/p = 1/(a1 + 1/(a2 + ...)), adjusted to odd length.
struct ContinuedFraction {
    std::vector<int> quotients;
    int sum = 0;
};

ContinuedFraction cf_expand(const LensParams& lp);

/// S(p,q): sum of the partial quotients.
inline int quotient_sum(const LensParams& lp) { return cf_expand(lp).sum; }

enum class CrossingType { Sigma2, Sigma1Inv };

/// Strand ends at a crossing, seen along the braid direction. "Upper" is the
/// lower-numbered strand position of the generator.
enum class Slot { InUpper = 0, InLower = 1, OutUpper = 2, OutLower = 3 };

struct SlotRef {
    int crossing = 0;  ///< 1-based
    Slot slot = Slot::InUpper;

    friend bool operator==(const SlotRef&, const SlotRef&) = default;
};

/// Edge of the projection graph between two crossing corner slots, possibly
/// running through the plat caps.
struct Arc {
    SlotRef from;
    SlotRef to;
};

/// Plat closure of sigma2^a1 sigma1^-a2 ... sigma2^am, caps joining strand
/// positions (1,2) and (3,4) at both ends.
struct FourPlatDiagram {
    std::vector<CrossingType> crossings;
    std::vector<Arc> arcs;

    [[nodiscard]] int crossing_count() const { return static_cast<int>(crossings.size()); }
};

FourPlatDiagram plat_diagram(const ContinuedFraction& cf);

std::string to_string(CrossingType t);
std::string to_string(Slot s);

/// `crossing <j> <type>` and `arc <j> <slot> <k> <slot>` lines.
void write_diagram(std::ostream& out, const FourPlatDiagram& d);

/// Corner i (1..4) of the {0,1}-square that a slot maps to.
int corner_of(CrossingType type, Slot slot);

/// Ferri crystallization with one bridge per crossing. Vertex v_{j,i} has
/// index 4(j-1) + (i-1).
struct LabelledCrystallization {
    ColouredGraph graph;
    std::vector<VertexLabel> labels;
    FourPlatDiagram diagram;
    LensParams params;
    ContinuedFraction cf;

    [[nodiscard]] int crossing_count() const { return diagram.crossing_count(); }
    [[nodiscard]] static Vertex vertex(int crossing, int corner) {
        return static_cast<Vertex>(4 * (crossing - 1) + (corner - 1));
    }
    [[nodiscard]] LabelledGem gem() const { return {graph, labels}; }
};

LabelledCrystallization ferri_crystallization(const LensParams& lp);

bool colour_swap_symmetry(const LabelledCrystallization& lc);

/// Index sets of the witness argument, together with the vertex sets the
/// argument predicts for the chosen cycles.
struct ProofIndexSets {
    std::vector<int> i1;
    std::vector<int> i2;
    /// V(D) u V(D'), sorted.
    std::vector<Vertex> d_union;
    /// The {1,2}-cycle of the region holding the fourth string, sorted.
    std::vector<Vertex> inner_12_cycle;
    /// Its {0,3} mirror, sorted.
    std::vector<Vertex> inner_03_cycle;
    /// The {2,3}-cycle through the fourth-string edge, sorted.
    std::vector<Vertex> fourth_string_cycle;
    /// {v_{j,2} : 3 <= j <= s-1}, sorted.
    std::vector<Vertex> leftover;
};

ProofIndexSets proof_index_sets(const LabelledCrystallization& lc);

}  // namespace lensgem
