#pragma once

#include "meyniel/graph.hpp"

#include <optional>
#include <span>
#include <vector>

namespace meyniel {

/// Adjacency to prefix contractions of an ordered vertex sequence.
class PrefixIndex {
public:
    PrefixIndex(const Graph& g, std::span<const Vertex> seq) : first_(first_neighbor_index(g, seq)) {}

    /// u adjacent to at least one of s_1..s_i.
    bool adjacent(int i, Vertex u) const
    {
        int f = first_[u];
        return f != 0 && f <= i;
    }
    int first(Vertex u) const { return first_[u]; }

private:
    std::vector<int> first_;
};

bool prefix_adjacent(const Graph& g, std::span<const Vertex> seq, int i, Vertex u);

/// Induced path t_{i-1}-a-b-s_i, t_{i-1} being the contraction of s_1..s_{i-1}.
struct NiceCheckWitness {
    int index;  // i, 1-based
    Vertex a;
    Vertex b;
    bool operator==(const NiceCheckWitness&) const = default;
};

enum class NiceStatus { nice, p4_found, not_stable, not_maximal };

struct NiceCheck {
    NiceStatus status = NiceStatus::nice;
    std::optional<NiceCheckWitness> witness;  // set iff status == p4_found

    bool nice() const noexcept { return status == NiceStatus::nice; }
};

/// Checks stability and maximality, then looks for the first (i, a, b) in
/// lexicographic order with a seeing the prefix s_1..s_{i-1} but not s_i,
/// a-b an edge, and b seeing s_i but not the prefix. O(n^3).
NiceCheck nice_check(const Graph& g, std::span<const Vertex> order);

} // namespace meyniel
