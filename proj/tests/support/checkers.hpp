#pragma once

// Test-only reference checks. They recompute everything from the graph and
// the raw trace data, without ContractionView, PrefixIndex or LabelTable.

#include "meyniel/generate.hpp"
#include "meyniel/graph.hpp"
#include "meyniel/lexcolor.hpp"
#include "meyniel/obstruction.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace meyniel::testing {

inline Graph gnp(int n, double p, std::uint64_t seed)
{
    GenSpec spec;
    spec.family = Family::gnp;
    spec.n = n;
    spec.p = p;
    spec.seed = seed;
    return generate(spec);
}

inline Graph family(Family f, int n, double p, std::uint64_t seed)
{
    GenSpec spec;
    spec.family = f;
    spec.n = n;
    spec.p = p;
    spec.seed = seed;
    return generate(spec);
}

inline bool sees_any(const Graph& g, Vertex u, const std::vector<Vertex>& set)
{
    return std::any_of(set.begin(), set.end(), [&](Vertex s) { return g.adjacent(u, s); });
}

/// First i vertices of color c, in coloring order.
inline std::vector<Vertex> class_prefix(const ColorTrace& trace, int c, int i)
{
    auto cls = trace.class_of(c);
    return {cls.begin(), cls.begin() + i};
}

/// Empty string when bp is a bad path of G*_{i-1} for base color c.
inline std::string bad_path_violation(const Graph& g, const ColorTrace& trace, int c, const BadPath& bp)
{
    const int p = bp.length();
    const int i = bp.index;
    if (p < 3 || p % 2 == 0)
        return "length not odd >= 3";
    if (i < 2 || i > static_cast<int>(trace.class_of(c).size()))
        return "index out of range";
    const auto w = class_prefix(trace, c, i - 1);
    if (bp.v(p) != trace.class_of(c)[static_cast<std::size_t>(i - 1)])
        return "last vertex is not x_i";
    std::set<Vertex> distinct(bp.verts.begin(), bp.verts.end());
    if (static_cast<int>(distinct.size()) != p)
        return "repeated vertex";
    for (Vertex u : bp.verts) {
        if (trace.color_of[u] < c)
            return "vertex outside G*";
        if (std::find(w.begin(), w.end(), u) != w.end())
            return "vertex contracted into w";
    }
    if (!sees_any(g, bp.v(1), w))
        return "v_1 not adjacent to w";
    for (int k = 2; k <= p; ++k)
        if (sees_any(g, bp.v(k), w))
            return "v_" + std::to_string(k) + " adjacent to w";
    for (int k = 1; k < p; ++k)
        if (!g.adjacent(bp.v(k), bp.v(k + 1)))
            return "missing path edge";
    if (bp.chord && !(*bp.chord > 1 && *bp.chord < p - 1))
        return "chord index out of range";
    for (int a = 1; a <= p; ++a)
        for (int b = a + 2; b <= p; ++b) {
            bool declared = bp.chord && a == *bp.chord - 1 && b == *bp.chord + 1;
            if (g.adjacent(bp.v(a), bp.v(b)) != declared)
                return declared ? "declared chord missing" : "undeclared chord";
        }
    return {};
}

/// Empty string when `no` is a near-obstruction of its declared kind.
inline std::string near_violation(const Graph& g, const NearObstruction& no)
{
    const int p = no.length();
    const auto& P = no.verts;
    const Vertex z = no.apex;
    auto v = [&](int k) { return P[static_cast<std::size_t>(k)]; };
    if (p < 3 || p % 2 == 0)
        return "length not odd >= 3";
    std::set<Vertex> distinct(P.begin(), P.end());
    if (static_cast<int>(distinct.size()) != p + 1 || distinct.count(z))
        return "repeated vertex";
    for (int k = 0; k < p; ++k)
        if (!g.adjacent(v(k), v(k + 1)))
            return "missing path edge";
    if (!g.adjacent(z, v(0)) || !g.adjacent(z, v(p)))
        return "apex misses an end";
    if (no.chord && !(*no.chord > 0 && *no.chord < p - 1))
        return "chord index out of range";
    for (int a = 0; a <= p; ++a)
        for (int b = a + 2; b <= p; ++b) {
            bool declared = no.chord && a == *no.chord - 1 && b == *no.chord + 1;
            if (g.adjacent(v(a), v(b)) != declared)
                return declared ? "declared chord missing" : "undeclared chord";
        }
    const bool c02 = no.chord == 1;
    const bool c13 = no.chord == 2;
    switch (no.kind) {
    case 1:
        return c02 && !g.adjacent(z, v(1)) && !g.adjacent(z, v(2)) ? "" : "type 1 conditions";
    case 2:
        return c13 && (!g.adjacent(z, v(1)) || !g.adjacent(z, v(3))) ? "" : "type 2 conditions";
    case 3:
        return !c02 && !g.adjacent(z, v(1)) ? "" : "type 3 conditions";
    case 4:
        return !c02 && !c13 && g.adjacent(z, v(1)) && !g.adjacent(z, v(2)) ? "" : "type 4 conditions";
    default:
        return "unknown kind";
    }
}

/// Dense label vector of x from the definition, given that the first
/// `colored` entries of trace.order are colored. Index = color.
inline std::vector<int> dense_labels(const Graph& g, const ColorTrace& trace, Vertex x, int colored)
{
    const int n = g.order();
    std::vector<int> lab(static_cast<std::size_t>(n) + 1, 0);
    for (int s = 0; s < colored; ++s) {
        Vertex u = trace.order[static_cast<std::size_t>(s)];
        int c = trace.color_of[u];
        if (g.adjacent(x, u) && lab[c] == 0)
            lab[c] = n - (s + 1);
    }
    return lab;
}

inline int dense_compare(const std::vector<int>& a, const std::vector<int>& b)
{
    for (std::size_t c = a.size(); c-- > 1;)
        if (a[c] != b[c])
            return a[c] < b[c] ? -1 : 1;
    return 0;
}

/// Replays a trace against the label definition. Empty string when every
/// step picked a lex-maximal vertex and gave it the smallest free color.
inline std::string replay_violation(const Graph& g, const ColorTrace& trace)
{
    const int n = g.order();
    if (static_cast<int>(trace.order.size()) != n)
        return "order is not total";
    std::vector<char> colored(static_cast<std::size_t>(n), 0);
    for (int s = 0; s < n; ++s) {
        Vertex x = trace.order[static_cast<std::size_t>(s)];
        if (colored[x])
            return "vertex colored twice";
        if (trace.step_of[x] != s + 1)
            return "step_of mismatch";
        auto lx = dense_labels(g, trace, x, s);
        for (Vertex y = 0; y < n; ++y)
            if (!colored[y] && y != x && dense_compare(dense_labels(g, trace, y, s), lx) > 0)
                return "step " + std::to_string(s + 1) + " not lex-maximal";
        std::vector<char> used(static_cast<std::size_t>(n) + 2, 0);
        for (Vertex u : g.neighbors(x))
            if (colored[u])
                used[static_cast<std::size_t>(trace.color_of[u])] = 1;
        int mex = 1;
        while (used[static_cast<std::size_t>(mex)])
            ++mex;
        if (trace.color_of[x] != mex)
            return "step " + std::to_string(s + 1) + " not greedy";
        colored[x] = 1;
    }
    for (int c = 1; c <= trace.num_colors(); ++c) {
        if (trace.class_of(c).empty())
            return "empty color class";
        for (Vertex v : trace.class_of(c))
            if (trace.color_of[v] != c)
                return "class_of / color_of disagree";
    }
    return {};
}

/// A random legal LexColor execution: at each step a uniformly random
/// lex-maximal vertex. O(n^3) per call; desk scale only.
inline std::vector<Vertex> random_legal_order(const Graph& g, std::uint64_t seed)
{
    const int n = g.order();
    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> lab(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n) + 2, 0));
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> order;
    for (int step = 1; step <= n; ++step) {
        std::vector<Vertex> best;
        for (Vertex v = 0; v < n; ++v) {
            if (color[v])
                continue;
            int cmp = best.empty() ? 1 : dense_compare(lab[v], lab[best.front()]);
            if (cmp > 0)
                best.assign(1, v);
            else if (cmp == 0)
                best.push_back(v);
        }
        Vertex x = best[rng() % best.size()];
        std::vector<char> used(static_cast<std::size_t>(n) + 2, 0);
        for (Vertex u : g.neighbors(x))
            used[static_cast<std::size_t>(color[u])] = 1;
        int c = 1;
        while (used[static_cast<std::size_t>(c)])
            ++c;
        color[x] = c;
        order.push_back(x);
        for (Vertex y : g.neighbors(x))
            if (!color[y] && lab[y][static_cast<std::size_t>(c)] == 0)
                lab[y][static_cast<std::size_t>(c)] = n - step;
    }
    return order;
}

/// Quartic reference scan for an induced P4 t_{i-1}-a-b-s_i.
inline std::optional<std::tuple<int, Vertex, Vertex>> brute_nice_witness(const Graph& g, const std::vector<Vertex>& s)
{
    const int n = g.order();
    for (std::size_t i = 1; i < s.size(); ++i) {
        std::vector<Vertex> prefix(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(i));
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = 0; b < n; ++b) {
                if (a == b || !g.adjacent(a, b))
                    continue;
                if (sees_any(g, a, prefix) && !g.adjacent(a, s[i]) && g.adjacent(b, s[i]) && !sees_any(g, b, prefix))
                    return std::tuple{static_cast<int>(i) + 1, a, b};
            }
    }
    return std::nullopt;
}

/// 2-colorability by BFS.
inline bool is_bipartite(const Graph& g)
{
    std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (side[s] >= 0)
            continue;
        side[s] = 0;
        std::vector<Vertex> queue{s};
        for (std::size_t h = 0; h < queue.size(); ++h)
            for (Vertex u : g.neighbors(queue[h])) {
                if (side[u] < 0) {
                    side[u] = 1 - side[queue[h]];
                    queue.push_back(u);
                } else if (side[u] == side[queue[h]]) {
                    return false;
                }
            }
    }
    return true;
}

} // namespace meyniel::testing
