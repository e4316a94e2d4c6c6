#pragma once

#include "meyniel/graph.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace meyniel {

enum class Family { gnp, chordal, bipartite, cycle, complete, edgeless, builtin };

Family family_from_string(std::string_view name);
std::string_view to_string(Family family);

/// Parameters for `generate`.
///
/// - gnp: each of the n(n-1)/2 pairs is an edge with probability p.
/// - chordal: vertices arrive one at a time; each new vertex is joined to a
///   clique of earlier vertices (a random seed vertex plus each compatible
///   neighbor of it with probability p), so the arrival order reversed is a
///   perfect elimination order.
/// - bipartite: sides {0..n/2-1} and {n/2..n-1}; each cross pair with probability p.
/// - cycle / complete / edgeless: the obvious n-vertex graphs (cycle needs n >= 3).
/// - builtin: a named fixed graph, see `p6bar()` and `sec5()`.
struct GenSpec {
    Family family = Family::gnp;
    int n = 0;
    double p = 0.5;
    std::uint64_t seed = 0;
    std::string builtin;
};

/// Deterministic for a fixed spec; the sampling does not depend on
/// implementation-defined standard distributions.
Graph generate(const GenSpec& spec);

/// Complement of the path u-v-w-x-y-z; vertices u..z are 0..5.
Graph p6bar();

/// Triangles {a,d,e}, {b,f,g}, {c,h,i} plus af, ah, bd, bi, ce, cg;
/// vertices a..i are 0..8.
Graph sec5();

Graph builtin_graph(std::string_view name);

namespace p6 {
inline constexpr Vertex u = 0, v = 1, w = 2, x = 3, y = 4, z = 5;
}

namespace s5 {
inline constexpr Vertex a = 0, b = 1, c = 2, d = 3, e = 4, f = 5, g = 6, h = 7, i = 8;
}

} // namespace meyniel
