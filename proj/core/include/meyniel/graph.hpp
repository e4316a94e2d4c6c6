#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace meyniel {

/// Vertices are dense 0-based integers.
using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Raised on structurally invalid input (self-loops, out-of-range endpoints).
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Immutable simple undirected graph.
///
/// Adjacency is kept as dense bitset rows so `adjacent()` is O(1); sorted
/// neighbor lists are kept alongside for degree-bounded scans.
class Graph {
public:
    Graph() = default;

    /// Duplicate edges are merged; self-loops and out-of-range endpoints throw.
    static Graph build(int n, std::span<const Edge> edges);
    static Graph build(int n, std::initializer_list<Edge> edges)
    {
        return build(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    int order() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return m_; }

    bool adjacent(Vertex u, Vertex v) const noexcept
    {
        return (rows_[static_cast<std::size_t>(u) * words_ + (static_cast<std::size_t>(v) >> 6)] >> (v & 63)) & 1U;
    }

    int degree(Vertex v) const { return static_cast<int>(nbrs_[v].size()); }

    /// Neighbors of v in ascending order.
    std::span<const Vertex> neighbors(Vertex v) const { return nbrs_[v]; }

    /// All edges (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    /// Subgraph induced by `keep`; vertex i of the result is keep[i].
    Graph induced(std::span<const Vertex> keep) const;

    bool operator==(const Graph& other) const noexcept
    {
        return n_ == other.n_ && rows_ == other.rows_;
    }

private:
    int n_ = 0;
    std::size_t words_ = 0;
    std::size_t m_ = 0;
    std::vector<std::uint64_t> rows_;
    std::vector<std::vector<Vertex>> nbrs_;
};

/// For an ordered vertex sequence s_1..s_k, entry u of the result is the
/// smallest 1-based j with u adjacent to s_j, or 0 if u has no neighbor in
/// the sequence. Costs O(sum of degrees over the sequence).
///
/// "u is adjacent to the contraction of s_1..s_i" is then
/// `idx[u] != 0 && idx[u] <= i`.
std::vector<int> first_neighbor_index(const Graph& g, std::span<const Vertex> seq);

} // namespace meyniel
