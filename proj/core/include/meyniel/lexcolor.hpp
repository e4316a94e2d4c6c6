#pragma once

#include "meyniel/graph.hpp"

#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace meyniel {

/// One nonzero label: the vertex's first neighbor of `color` was the
/// (n - value)-th vertex colored overall.
struct LabelEntry {
    int color;
    int value;
    bool operator==(const LabelEntry&) const = default;
};

/// Reverse-lexicographic comparison of sparse label vectors. Both inputs hold
/// only nonzero entries, sorted by color in strictly descending order; the
/// highest color at which they differ decides.
std::strong_ordering lex_compare(std::span<const LabelEntry> a, std::span<const LabelEntry> b);

/// Sparse per-vertex labels, entries kept sorted by descending color.
class LabelTable {
public:
    explicit LabelTable(int n) : rows_(static_cast<std::size_t>(n)) {}

    int label(Vertex x, int color) const;
    std::span<const LabelEntry> entries(Vertex x) const { return rows_[x]; }

    /// Sets label_x(color) := value if it is still zero. Returns whether it was set.
    bool assign_if_zero(Vertex x, int color, int value);

private:
    std::vector<std::vector<LabelEntry>> rows_;
};

/// How to choose among several lex-maximal uncolored vertices.
///
/// lowest_index: smallest vertex id wins.
/// forced: the full coloring order is prescribed; every prescribed vertex must
///   actually be lex-maximal at its step or lex_color throws.
/// starting_with: vertex v is colored first (always legal since all labels are
///   zero at step 1); later ties go to the smallest id.
class TieBreak {
public:
    enum class Mode { lowest_index, forced, starting_with };

    TieBreak() = default;
    static TieBreak lowest_index() { return {}; }
    static TieBreak forced(std::vector<Vertex> order);
    static TieBreak starting_with(Vertex v);

    Mode mode() const noexcept { return mode_; }
    std::span<const Vertex> forced_order() const noexcept { return order_; }
    Vertex first() const noexcept { return first_; }

    /// Throws std::invalid_argument unless compatible with an n-vertex graph.
    void validate(int n) const;

private:
    Mode mode_ = Mode::lowest_index;
    std::vector<Vertex> order_;
    Vertex first_ = -1;
};

enum class Strategy { naive, refined };

/// Record of one LexColor run.
struct ColorTrace {
    std::vector<Vertex> order;                 // vertices in coloring order
    std::vector<int> step_of;                  // vertex -> 1-based step
    std::vector<int> color_of;                 // vertex -> color in 1..num_colors()
    std::vector<std::vector<Vertex>> classes;  // classes[c-1], in coloring order

    int num_colors() const noexcept { return static_cast<int>(classes.size()); }
    std::span<const Vertex> class_of(int color) const { return classes.at(static_cast<std::size_t>(color - 1)); }

    /// Trace whose coloring order is classes[0], then classes[1], ...
    static ColorTrace from_classes(int n, std::vector<std::vector<Vertex>> classes);

    bool operator==(const ColorTrace&) const = default;
};

/// A forced order chose a vertex that was not lex-maximal.
class LexOrderError : public std::runtime_error {
public:
    LexOrderError(int step, Vertex chosen, Vertex competitor);
    int step() const noexcept { return step_; }
    Vertex chosen() const noexcept { return chosen_; }
    Vertex competitor() const noexcept { return competitor_; }

private:
    int step_;
    Vertex chosen_;
    Vertex competitor_;
};

/// Greedy lexicographic coloring. Each step colors an uncolored vertex whose
/// label vector is maximal, with the smallest color missing from its colored
/// neighborhood, then stamps label (c, n - i) on uncolored neighbors that had
/// no neighbor of color c yet.
///
/// `naive` finds the maximum by pairwise comparison each step. `refined`
/// keeps the uncolored vertices in label order, refining it after each step
/// in O(n), for O(n^2) overall. Both produce identical traces.
ColorTrace lex_color(const Graph& g, const TieBreak& tb = {}, Strategy strategy = Strategy::refined);

} // namespace meyniel
