#include "meyniel/niceset.hpp"

namespace meyniel {

bool prefix_adjacent(const Graph& g, std::span<const Vertex> seq, int i, Vertex u)
{
    return PrefixIndex(g, seq).adjacent(i, u);
}

NiceCheck nice_check(const Graph& g, std::span<const Vertex> order)
{
    const int n = g.order();
    const int k = static_cast<int>(order.size());

    std::vector<char> in_s(static_cast<std::size_t>(n), 0);
    for (Vertex s : order) {
        if (in_s[s])
            return {NiceStatus::not_stable, std::nullopt};
        in_s[s] = 1;
    }
    for (Vertex s : order)
        for (Vertex u : g.neighbors(s))
            if (in_s[u])
                return {NiceStatus::not_stable, std::nullopt};

    PrefixIndex prefix(g, order);
    for (Vertex u = 0; u < n; ++u)
        if (!in_s[u] && prefix.first(u) == 0)
            return {NiceStatus::not_maximal, std::nullopt};

    for (int i = 2; i <= k; ++i) {
        const Vertex si = order[static_cast<std::size_t>(i - 1)];
        for (Vertex a = 0; a < n; ++a) {
            if (!prefix.adjacent(i - 1, a) || g.adjacent(a, si))
                continue;
            for (Vertex b : g.neighbors(a))
                if (g.adjacent(b, si) && !prefix.adjacent(i - 1, b))
                    return {NiceStatus::p4_found, NiceCheckWitness{i, a, b}};
        }
    }
    return {NiceStatus::nice, std::nullopt};
}

} // namespace meyniel
