#include "meyniel/lexcolor.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>

namespace meyniel {

std::strong_ordering lex_compare(std::span<const LabelEntry> a, std::span<const LabelEntry> b)
{
    std::size_t i = 0;
    for (; i < a.size() && i < b.size(); ++i) {
        if (a[i].color != b[i].color)
            return a[i].color <=> b[i].color;  // the higher color is nonzero only on one side
        if (a[i].value != b[i].value)
            return a[i].value <=> b[i].value;
    }
    if (i < a.size())
        return std::strong_ordering::greater;
    if (i < b.size())
        return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

int LabelTable::label(Vertex x, int color) const
{
    for (const auto& e : rows_[x])
        if (e.color == color)
            return e.value;
    return 0;
}

bool LabelTable::assign_if_zero(Vertex x, int color, int value)
{
    auto& row = rows_[x];
    auto it = std::find_if(row.begin(), row.end(), [color](const LabelEntry& e) { return e.color <= color; });
    if (it != row.end() && it->color == color)
        return false;
    row.insert(it, LabelEntry{color, value});
    return true;
}

TieBreak TieBreak::forced(std::vector<Vertex> order)
{
    TieBreak tb;
    tb.mode_ = Mode::forced;
    tb.order_ = std::move(order);
    return tb;
}

TieBreak TieBreak::starting_with(Vertex v)
{
    TieBreak tb;
    tb.mode_ = Mode::starting_with;
    tb.first_ = v;
    return tb;
}

void TieBreak::validate(int n) const
{
    if (mode_ == Mode::starting_with && (first_ < 0 || first_ >= n))
        throw std::invalid_argument("start vertex " + std::to_string(first_) + " out of range");
    if (mode_ != Mode::forced)
        return;
    if (static_cast<int>(order_.size()) != n)
        throw std::invalid_argument("forced order must list all " + std::to_string(n) + " vertices");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (Vertex v : order_) {
        if (v < 0 || v >= n || seen[v])
            throw std::invalid_argument("forced order is not a permutation of the vertices");
        seen[v] = 1;
    }
}

LexOrderError::LexOrderError(int step, Vertex chosen, Vertex competitor)
    : std::runtime_error("forced order breaks lex-maximality at step " + std::to_string(step) + ": vertex "
                         + std::to_string(competitor) + " has a strictly greater label than "
                         + std::to_string(chosen))
    , step_(step)
    , chosen_(chosen)
    , competitor_(competitor)
{
}

ColorTrace ColorTrace::from_classes(int n, std::vector<std::vector<Vertex>> classes)
{
    ColorTrace t;
    t.step_of.assign(static_cast<std::size_t>(n), 0);
    t.color_of.assign(static_cast<std::size_t>(n), 0);
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (Vertex v : classes[c]) {
            t.order.push_back(v);
            t.step_of[v] = static_cast<int>(t.order.size());
            t.color_of[v] = static_cast<int>(c) + 1;
        }
    t.classes = std::move(classes);
    return t;
}

namespace {

class TraceBuilder {
public:
    explicit TraceBuilder(int n)
    {
        trace_.step_of.assign(static_cast<std::size_t>(n), 0);
        trace_.color_of.assign(static_cast<std::size_t>(n), 0);
        trace_.order.reserve(static_cast<std::size_t>(n));
    }

    void push(Vertex x, int color)
    {
        trace_.order.push_back(x);
        trace_.step_of[x] = static_cast<int>(trace_.order.size());
        trace_.color_of[x] = color;
        if (color > trace_.num_colors())
            trace_.classes.resize(static_cast<std::size_t>(color));
        trace_.classes[static_cast<std::size_t>(color - 1)].push_back(x);
    }

    ColorTrace finish() && { return std::move(trace_); }

private:
    ColorTrace trace_;
};

ColorTrace lex_color_naive(const Graph& g, const TieBreak& tb)
{
    const int n = g.order();
    LabelTable labels(n);
    std::vector<char> colored(static_cast<std::size_t>(n), 0);
    TraceBuilder trace(n);

    for (int step = 1; step <= n; ++step) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (colored[v])
                continue;
            if (best < 0 || lex_compare(labels.entries(v), labels.entries(best)) > 0)
                best = v;
        }

        Vertex x = best;
        if (tb.mode() == TieBreak::Mode::forced) {
            x = tb.forced_order()[static_cast<std::size_t>(step - 1)];
            if (lex_compare(labels.entries(best), labels.entries(x)) > 0)
                throw LexOrderError(step, x, best);
        } else if (tb.mode() == TieBreak::Mode::starting_with && step == 1) {
            x = tb.first();
        }

        // smallest color missing from the colored neighborhood; entries are descending
        auto row = labels.entries(x);
        int color = 1;
        for (auto it = row.rbegin(); it != row.rend() && it->color == color; ++it)
            ++color;

        colored[x] = 1;
        trace.push(x, color);
        for (Vertex y : g.neighbors(x))
            if (!colored[y])
                labels.assign_if_zero(y, color, n - step);
    }
    return std::move(trace).finish();
}

// Row-per-vertex bit matrix: bit c of row y set iff y has a colored neighbor of color c.
class ColorSeen {
public:
    ColorSeen(int n, int colors)
        : words_((static_cast<std::size_t>(colors) + 64) / 64)
        , bits_(static_cast<std::size_t>(n) * words_, 0)
    {
    }

    bool test(Vertex y, int c) const
    {
        return (bits_[static_cast<std::size_t>(y) * words_ + (static_cast<std::size_t>(c) >> 6)] >> (c & 63)) & 1U;
    }

    void set(Vertex y, int c)
    {
        bits_[static_cast<std::size_t>(y) * words_ + (static_cast<std::size_t>(c) >> 6)] |= std::uint64_t{1} << (c & 63);
    }

    /// Smallest c >= 1 with the bit clear.
    int first_missing(Vertex y) const
    {
        const std::uint64_t* row = &bits_[static_cast<std::size_t>(y) * words_];
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t free = ~row[w];
            if (w == 0)
                free &= ~std::uint64_t{1};
            if (free)
                return static_cast<int>(w * 64) + std::countr_zero(free);
        }
        return static_cast<int>(words_ * 64);
    }

private:
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

// Uncolored vertices sorted by label, highest first. diff_[k] is the highest
// color at which order_[k] and order_[k+1] have different labels (0 when the
// labels are identical), so the highest differing color of any two entries is
// the maximum of diff_ over the range between them.
class LabelOrder {
public:
    explicit LabelOrder(int n)
        : order_(static_cast<std::size_t>(n))
        , pos_(static_cast<std::size_t>(n))
        , diff_(n > 0 ? static_cast<std::size_t>(n - 1) : 0, 0)
        , in_s_(static_cast<std::size_t>(n), 0)
    {
        std::iota(order_.begin(), order_.end(), 0);
        std::iota(pos_.begin(), pos_.end(), 0);
    }

    /// Number of entries in the leading class of equal, maximal labels.
    std::size_t front_class_size() const
    {
        std::size_t k = 1;
        while (k < order_.size() && diff_[k - 1] == 0)
            ++k;
        return k;
    }

    Vertex at(std::size_t k) const { return order_[k]; }
    std::size_t position(Vertex v) const { return pos_[v]; }

    void erase(Vertex x)
    {
        const std::size_t p = pos_[x];
        const std::size_t size = order_.size();
        if (size > 1) {
            if (p == 0) {
                diff_.erase(diff_.begin());
            } else if (p == size - 1) {
                diff_.erase(diff_.begin() + static_cast<std::ptrdiff_t>(p - 1));
            } else {
                diff_[p - 1] = std::max(diff_[p - 1], diff_[p]);
                diff_.erase(diff_.begin() + static_cast<std::ptrdiff_t>(p));
            }
        }
        order_.erase(order_.begin() + static_cast<std::ptrdiff_t>(p));
        for (std::size_t k = p; k < order_.size(); ++k)
            pos_[order_[k]] = k;
    }

    void mark(Vertex y) { in_s_[y] = 1; }

    /// All marked vertices received the same new entry (color, value) with
    /// value below every existing value at `color`; marked vertices had
    /// label 0 at `color`. Inside each run of labels equal at colors >= color,
    /// marked vertices move to the front, keeping relative order.
    void refine(int color)
    {
        const std::size_t size = order_.size();
        std::size_t lo = 0;
        while (lo < size) {
            std::size_t hi = lo;
            bool any = in_s_[order_[lo]] != 0;
            while (hi + 1 < size && diff_[hi] < color) {
                ++hi;
                any = any || in_s_[order_[hi]] != 0;
            }
            if (any && hi > lo)
                split_block(lo, hi, color);
            lo = hi + 1;
        }
        for (Vertex v : order_)
            in_s_[v] = 0;
    }

private:
    void split_block(std::size_t lo, std::size_t hi, int color)
    {
        marked_.clear();
        rest_.clear();
        marked_diff_.clear();
        rest_diff_.clear();
        int run_marked = 0, run_rest = 0;
        for (std::size_t k = lo; k <= hi; ++k) {
            if (k > lo) {
                run_marked = std::max(run_marked, diff_[k - 1]);
                run_rest = std::max(run_rest, diff_[k - 1]);
            }
            Vertex v = order_[k];
            if (in_s_[v]) {
                if (!marked_.empty())
                    marked_diff_.push_back(run_marked);
                marked_.push_back(v);
                run_marked = 0;
            } else {
                if (!rest_.empty())
                    rest_diff_.push_back(run_rest);
                rest_.push_back(v);
                run_rest = 0;
            }
        }
        if (rest_.empty())
            return;  // every member gained the same entry, nothing moves

        std::size_t k = lo;
        for (Vertex v : marked_) {
            order_[k] = v;
            pos_[v] = k++;
        }
        for (Vertex v : rest_) {
            order_[k] = v;
            pos_[v] = k++;
        }
        std::size_t d = lo;
        for (int x : marked_diff_)
            diff_[d++] = x;
        diff_[d++] = color;
        for (int x : rest_diff_)
            diff_[d++] = x;
    }

    std::vector<Vertex> order_;
    std::vector<std::size_t> pos_;
    std::vector<int> diff_;
    std::vector<char> in_s_;
    std::vector<Vertex> marked_, rest_;
    std::vector<int> marked_diff_, rest_diff_;
};

ColorTrace lex_color_refined(const Graph& g, const TieBreak& tb)
{
    const int n = g.order();
    LabelOrder order(n);
    ColorSeen seen(n, n + 1);
    std::vector<char> colored(static_cast<std::size_t>(n), 0);
    TraceBuilder trace(n);

    for (int step = 1; step <= n; ++step) {
        const std::size_t front = order.front_class_size();
        Vertex lowest = order.at(0);
        for (std::size_t k = 1; k < front; ++k)
            lowest = std::min(lowest, order.at(k));

        Vertex x = lowest;
        if (tb.mode() == TieBreak::Mode::forced) {
            x = tb.forced_order()[static_cast<std::size_t>(step - 1)];
            if (order.position(x) >= front)
                throw LexOrderError(step, x, lowest);
        } else if (tb.mode() == TieBreak::Mode::starting_with && step == 1) {
            x = tb.first();
        }

        const int color = seen.first_missing(x);
        colored[x] = 1;
        order.erase(x);
        trace.push(x, color);

        bool any = false;
        for (Vertex y : g.neighbors(x)) {
            if (colored[y] || seen.test(y, color))
                continue;
            seen.set(y, color);
            order.mark(y);
            any = true;
        }
        if (any)
            order.refine(color);
    }
    return std::move(trace).finish();
}

} // namespace

ColorTrace lex_color(const Graph& g, const TieBreak& tb, Strategy strategy)
{
    tb.validate(g.order());
    return strategy == Strategy::naive ? lex_color_naive(g, tb) : lex_color_refined(g, tb);
}

} // namespace meyniel
