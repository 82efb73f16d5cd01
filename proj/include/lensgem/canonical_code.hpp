#pragma once

#include <compare>
#include <string>

#include "lensgem/coloured_graph.hpp"

namespace lensgem {

/// Canonical string of a connected 4-coloured graph up to colour-isomorphism:
/// `<n>|<table 0>|<table 1>|<table 2>|<table 3>`, tables as comma-separated
/// 0-based images.
struct GemCode {
    std::string text;

    friend auto operator<=>(const GemCode&, const GemCode&) = default;
};

/// Minimum over all 24 colour permutations and all n start vertices of the
/// breadth-first renumbering candidate. Parallel over start vertices.
GemCode canonical_code(const ColouredGraph& g, int jobs = 0);

/// Single-threaded reference path, kept for tests and benchmarks.
GemCode canonical_code_serial(const ColouredGraph& g);

/// Rebuilds the graph a code string describes (the candidate numbering).
ColouredGraph graph_from_code(const GemCode& code);

}  // namespace lensgem
