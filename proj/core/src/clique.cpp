#include "meyniel/clique.hpp"

namespace meyniel {

CliqueOutcome greedy_clique(const Graph& g, const ColorTrace& trace)
{
    CliqueOutcome out;
    // in_q_neighbors[v] = |N(v) ∩ Q|
    std::vector<int> in_q_neighbors(static_cast<std::size_t>(g.order()), 0);

    for (int c = trace.num_colors(); c >= 1; --c) {
        Vertex best = -1;
        for (Vertex x : trace.class_of(c))
            if (best < 0 || in_q_neighbors[x] > in_q_neighbors[best]
                || (in_q_neighbors[x] == in_q_neighbors[best] && x < best))
                best = x;
        if (in_q_neighbors[best] != static_cast<int>(out.clique.size())) {
            out.failed_color = c;
            return out;
        }
        out.clique.push_back(best);
        for (Vertex y : g.neighbors(best))
            ++in_q_neighbors[y];
    }
    out.complete = true;
    return out;
}

} // namespace meyniel
