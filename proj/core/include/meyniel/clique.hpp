#pragma once

#include "meyniel/graph.hpp"
#include "meyniel/lexcolor.hpp"

#include <vector>

namespace meyniel {

/// Result of the greedy one-vertex-per-color clique search.
///
/// complete: `clique` holds one vertex of every color and is a clique.
/// otherwise: `clique` holds one vertex of each color above `failed_color`,
///   and no vertex of `failed_color` is adjacent to all of it.
struct CliqueOutcome {
    bool complete = false;
    int failed_color = 0;
    std::vector<Vertex> clique;  // in selection order, highest color first

    bool operator==(const CliqueOutcome&) const = default;
};

/// For c = num_colors down to 1, adds the vertex of color c with the most
/// neighbors in the current clique (lowest id on ties). Stops at the first
/// color whose best vertex misses part of the clique. O(n + m).
CliqueOutcome greedy_clique(const Graph& g, const ColorTrace& trace);

} // namespace meyniel
