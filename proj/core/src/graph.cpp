#include "meyniel/graph.hpp"

#include <algorithm>

namespace meyniel {

Graph Graph::build(int n, std::span<const Edge> edges)
{
    if (n < 0)
        throw GraphError("negative vertex count");
    Graph g;
    g.n_ = n;
    g.words_ = (static_cast<std::size_t>(n) + 63) / 64;
    g.rows_.assign(static_cast<std::size_t>(n) * g.words_, 0);
    g.nbrs_.resize(static_cast<std::size_t>(n));

    auto set_bit = [&g](Vertex u, Vertex v) {
        g.rows_[static_cast<std::size_t>(u) * g.words_ + (static_cast<std::size_t>(v) >> 6)]
            |= std::uint64_t{1} << (v & 63);
    };

    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw GraphError("edge endpoint out of range: (" + std::to_string(u) + ", "
                             + std::to_string(v) + ") with n = " + std::to_string(n));
        if (u == v)
            throw GraphError("self-loop at vertex " + std::to_string(u));
        if (g.adjacent(u, v))
            continue;
        set_bit(u, v);
        set_bit(v, u);
        g.nbrs_[u].push_back(v);
        g.nbrs_[v].push_back(u);
        ++g.m_;
    }
    for (auto& list : g.nbrs_)
        std::sort(list.begin(), list.end());
    return g;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : nbrs_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(std::span<const Vertex> keep) const
{
    std::vector<int> local(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        Vertex v = keep[i];
        if (v < 0 || v >= n_)
            throw GraphError("induced: vertex out of range");
        if (local[v] != -1)
            throw GraphError("induced: repeated vertex " + std::to_string(v));
        local[v] = static_cast<int>(i);
    }
    std::vector<Edge> sub;
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (Vertex w : nbrs_[keep[i]])
            if (local[w] > static_cast<int>(i))
                sub.emplace_back(static_cast<Vertex>(i), local[w]);
    return build(static_cast<int>(keep.size()), sub);
}

std::vector<int> first_neighbor_index(const Graph& g, std::span<const Vertex> seq)
{
    std::vector<int> idx(static_cast<std::size_t>(g.order()), 0);
    for (std::size_t j = 0; j < seq.size(); ++j)
        for (Vertex u : g.neighbors(seq[j]))
            if (idx[u] == 0)
                idx[u] = static_cast<int>(j) + 1;
    return idx;
}

} // namespace meyniel
