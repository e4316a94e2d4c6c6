#include "meyniel/generate.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

namespace meyniel {

namespace {

// mt19937_64 output is fully specified by the standard; the two helpers below
// keep the derived values portable as well.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    bool bernoulli(double p) { return static_cast<double>(rng_() >> 11) * 0x1.0p-53 < p; }

    std::size_t below(std::size_t bound) { return static_cast<std::size_t>(rng_() % bound); }

    template <typename T>
    void shuffle(std::vector<T>& xs)
    {
        for (std::size_t i = xs.size(); i > 1; --i)
            std::swap(xs[i - 1], xs[below(i)]);
    }

private:
    std::mt19937_64 rng_;
};

Graph gen_gnp(int n, double p, Sampler& s)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (s.bernoulli(p))
                edges.emplace_back(u, v);
    return Graph::build(n, edges);
}

Graph gen_chordal(int n, double p, Sampler& s)
{
    std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    std::vector<Edge> edges;
    for (Vertex k = 1; k < n; ++k) {
        Vertex anchor = static_cast<Vertex>(s.below(static_cast<std::size_t>(k)));
        std::vector<Vertex> clique{anchor};
        std::vector<Vertex> candidates;
        for (Vertex u = 0; u < k; ++u)
            if (adj[anchor][u])
                candidates.push_back(u);
        s.shuffle(candidates);
        for (Vertex u : candidates) {
            if (!s.bernoulli(p))
                continue;
            bool fits = std::all_of(clique.begin(), clique.end(), [&](Vertex q) { return adj[q][u] != 0; });
            if (fits)
                clique.push_back(u);
        }
        for (Vertex q : clique) {
            adj[q][k] = adj[k][q] = 1;
            edges.emplace_back(q, k);
        }
    }
    return Graph::build(n, edges);
}

Graph gen_bipartite(int n, double p, Sampler& s)
{
    int left = n / 2;
    std::vector<Edge> edges;
    for (Vertex u = 0; u < left; ++u)
        for (Vertex v = left; v < n; ++v)
            if (s.bernoulli(p))
                edges.emplace_back(u, v);
    return Graph::build(n, edges);
}

} // namespace

Family family_from_string(std::string_view name)
{
    if (name == "gnp") return Family::gnp;
    if (name == "chordal") return Family::chordal;
    if (name == "bipartite") return Family::bipartite;
    if (name == "cycle") return Family::cycle;
    if (name == "complete") return Family::complete;
    if (name == "edgeless") return Family::edgeless;
    if (name == "builtin") return Family::builtin;
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

std::string_view to_string(Family family)
{
    switch (family) {
    case Family::gnp: return "gnp";
    case Family::chordal: return "chordal";
    case Family::bipartite: return "bipartite";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::edgeless: return "edgeless";
    case Family::builtin: return "builtin";
    }
    return "?";
}

Graph p6bar()
{
    using namespace p6;
    // every pair except uv, vw, wx, xy, yz
    return Graph::build(6, {{u, w}, {u, x}, {u, y}, {u, z}, {v, x}, {v, y}, {v, z}, {w, y}, {w, z}, {x, z}});
}

Graph sec5()
{
    using namespace s5;
    return Graph::build(9, {{a, d}, {a, e}, {d, e}, {b, f}, {b, g}, {f, g}, {c, h}, {c, i}, {h, i},
                            {a, f}, {a, h}, {b, d}, {b, i}, {c, e}, {c, g}});
}

Graph builtin_graph(std::string_view name)
{
    if (name == "p6bar")
        return p6bar();
    if (name == "sec5")
        return sec5();
    throw std::invalid_argument("unknown builtin graph '" + std::string(name) + "'");
}

Graph generate(const GenSpec& spec)
{
    if (spec.family == Family::builtin)
        return builtin_graph(spec.builtin);
    if (spec.n < 0)
        throw std::invalid_argument("vertex count must be >= 0");
    if (!(spec.p >= 0.0 && spec.p <= 1.0))
        throw std::invalid_argument("probability must lie in [0, 1]");

    Sampler s(spec.seed);
    const int n = spec.n;
    switch (spec.family) {
    case Family::gnp:
        return gen_gnp(n, spec.p, s);
    case Family::chordal:
        return gen_chordal(n, spec.p, s);
    case Family::bipartite:
        return gen_bipartite(n, spec.p, s);
    case Family::cycle: {
        if (n < 3)
            throw std::invalid_argument("cycle needs at least 3 vertices");
        std::vector<Edge> edges;
        for (Vertex v = 0; v < n; ++v)
            edges.emplace_back(v, (v + 1) % n);
        return Graph::build(n, edges);
    }
    case Family::complete: {
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                edges.emplace_back(u, v);
        return Graph::build(n, edges);
    }
    case Family::edgeless:
        return Graph::build(n, std::span<const Edge>{});
    case Family::builtin:
        break;
    }
    throw std::logic_error("unreachable");
}

} // namespace meyniel
