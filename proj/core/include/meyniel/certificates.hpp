#pragma once

#include "meyniel/graph.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace meyniel {

/// Odd cycle of length >= 5 whose only chord, if any, is `chord`.
/// Consecutive entries of `cycle` (cyclically) are the cycle edges.
struct MeynielObstruction {
    std::vector<Vertex> cycle;
    std::optional<Edge> chord;  // stored with first < second

    bool operator==(const MeynielObstruction&) const = default;
};

/// Proper coloring (vertex -> 1..k) together with a clique of size k.
struct OptimalCertificate {
    std::vector<int> coloring;
    std::vector<Vertex> clique;

    int num_colors() const noexcept { return static_cast<int>(clique.size()); }
    bool operator==(const OptimalCertificate&) const = default;
};

/// Maximal stable set s_1..s_k, ordered so that for no i is there an induced
/// path t-a-b-s_i with t the contraction of s_1..s_{i-1}.
struct NiceStableSetCert {
    std::vector<Vertex> order;

    bool operator==(const NiceStableSetCert&) const = default;
};

using Certificate = std::variant<OptimalCertificate, MeynielObstruction, NiceStableSetCert>;

inline std::optional<Edge> make_chord(Vertex a, Vertex b)
{
    return a < b ? Edge{a, b} : Edge{b, a};
}

} // namespace meyniel
