#pragma once

#include "meyniel/certificates.hpp"
#include "meyniel/clique.hpp"
#include "meyniel/graph.hpp"
#include "meyniel/lexcolor.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

namespace meyniel {

/// An internal invariant of obstruction extraction failed. Never raised for a
/// genuine LexColor trace; signals a broken precondition or a bug.
class ObstructionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// G* and its contractions for base color c, without materializing them.
///
/// G* drops every vertex of color < c. Contracting x_1..x_i (the first i
/// vertices of color c, in coloring order) into w_i makes w_i adjacent to
/// exactly the vertices u with 1 <= first_nb(u) <= i.
class ContractionView {
public:
    ContractionView(const Graph& g, const ColorTrace& trace, int color);

    int color() const noexcept { return color_; }
    int class_size() const noexcept { return static_cast<int>(xs_.size()); }
    std::span<const Vertex> xs() const noexcept { return xs_; }
    /// x_i, 1-based.
    Vertex x(int i) const { return xs_.at(static_cast<std::size_t>(i - 1)); }
    /// Smallest j with u adjacent to x_j, 0 if none.
    int first_nb(Vertex u) const { return first_nb_[u]; }
    bool in_star(Vertex u) const { return color_of_[u] >= color_; }
    /// Whether u is adjacent to w_i in G*_i.
    bool adjacent_to_w(Vertex u, int i) const
    {
        int f = first_nb_[u];
        return f != 0 && f <= i;
    }

private:
    int color_;
    std::vector<Vertex> xs_;
    std::vector<int> first_nb_;
    std::vector<int> color_of_;
};

ContractionView build_view(const Graph& g, const ColorTrace& trace, int color);

/// Odd path w_{i-1}-v_1-...-v_p in G*_{i-1} with v_p = x_i, induced except for
/// at most one chord v_{t-1}v_{t+1} (1 < t < p-1).
struct BadPath {
    int index = 0;               // i
    std::vector<Vertex> verts;   // v_1..v_p; verts[k-1] = v_k
    std::optional<int> chord;    // t

    int length() const noexcept { return static_cast<int>(verts.size()); }  // p
    Vertex v(int k) const { return verts[static_cast<std::size_t>(k - 1)]; }
    bool operator==(const BadPath&) const = default;
};

/// Path v_0..v_p (p odd >= 3) with at most one chord v_{t-1}v_{t+1}
/// (0 < t < p-1) and an apex z adjacent to v_0 and v_p, of kind 1..4:
///   1: the chord is v_0v_2, z misses v_1 and v_2
///   2: the chord is v_1v_3, z misses v_1 or v_3
///   3: v_0v_2 is not a chord, z misses v_1
///   4: neither v_0v_2 nor v_1v_3 is a chord, z sees v_1 and misses v_2
struct NearObstruction {
    std::vector<Vertex> verts;   // v_0..v_p; verts[k] = v_k
    std::optional<int> chord;    // t
    Vertex apex = -1;            // z
    int kind = 0;

    int length() const noexcept { return static_cast<int>(verts.size()) - 1; }  // p
    bool operator==(const NearObstruction&) const = default;
};

/// The bad path w_{h-1}-a-b-x_h built from a clique failure, where h is the
/// smallest index with w_h adjacent to the whole failed clique Q, a is in Q
/// and misses x_h, and b is in Q, sees x_h and misses w_{h-1}.
BadPath initial_bad_path(const Graph& g, const ContractionView& view, const CliqueOutcome& fail);

/// A vertex z colored before x_i, of color above c, adjacent to x_i and to
/// w_{i-1}, missing v_1 or v_r (r = 3 if v_1v_3 is the chord, else r = 2).
/// Among qualifying neighbors of x_i, the earliest colored one is returned.
Vertex find_z(const Graph& g, const ColorTrace& trace, const ContractionView& view, const BadPath& bp);

/// One reduction step: either a shorter-index bad path or a near-obstruction.
std::variant<BadPath, NearObstruction> reduce_bad_path(const Graph& g, const ContractionView& view,
                                                       const BadPath& bp, Vertex z);

/// Repeats find_z + reduce_bad_path until a near-obstruction appears.
/// `steps`, if given, receives the number of reductions performed.
NearObstruction bad_path_to_near(const Graph& g, const ColorTrace& trace, const ContractionView& view,
                                 BadPath bp, int* steps = nullptr);

/// Walks a near-obstruction down to an odd cycle with at most one chord,
/// using only vertices of the path and the apex.
MeynielObstruction near_to_obstruction(const Graph& g, NearObstruction no);

/// Full pipeline from a clique failure. The result is verified before return.
MeynielObstruction extract_obstruction(const Graph& g, const ColorTrace& trace, const CliqueOutcome& fail);

} // namespace meyniel
