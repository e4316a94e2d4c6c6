#pragma once

// Exhaustive reference computations for small graphs. These are test
// equipment: each one refuses inputs above its size limit.

#include "meyniel/certificates.hpp"
#include "meyniel/graph.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace meyniel::oracle {

class SizeLimitError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr int kChromaticLimit = 14;
inline constexpr int kOmegaLimit = 20;
inline constexpr int kMeynielLimit = 10;
inline constexpr int kCliqueListLimit = 30;

/// Exact chromatic number by backtracking.
int chromatic_bf(const Graph& g);

/// Exact clique number by branch and bound.
int omega_bf(const Graph& g);

/// nullopt when every odd cycle of length >= 5 has two chords; otherwise the
/// first offending cycle found (start at its smallest vertex, second vertex
/// smaller than the last).
std::optional<MeynielObstruction> is_meyniel_bf(const Graph& g);

/// All inclusion-maximal cliques, each sorted, listed in lexicographic order.
std::vector<std::vector<Vertex>> maximal_cliques(const Graph& g);

/// Stable and meets every maximal clique.
bool is_strong_stable_set(const Graph& g, std::span<const Vertex> s);

} // namespace meyniel::oracle
