#include "meyniel/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>

namespace meyniel::oracle {

namespace {

void require_at_most(const Graph& g, int limit, const char* what)
{
    if (g.order() > limit)
        throw SizeLimitError(std::string(what) + ": graph has " + std::to_string(g.order())
                             + " vertices, limit is " + std::to_string(limit));
}

using Mask = std::uint64_t;

std::vector<Mask> neighbor_masks(const Graph& g)
{
    std::vector<Mask> nb(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v = 0; v < g.order(); ++v)
        for (Vertex u : g.neighbors(v))
            nb[v] |= Mask{1} << u;
    return nb;
}

class Colorer {
public:
    Colorer(const Graph& g, int k) : g_(g), k_(k), color_(static_cast<std::size_t>(g.order()), -1)
    {
        order_.resize(static_cast<std::size_t>(g.order()));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&g](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    }

    bool run() { return place(0, 0); }

private:
    bool place(std::size_t idx, int used)
    {
        if (idx == order_.size())
            return true;
        Vertex v = order_[idx];
        int limit = std::min(k_, used + 1);
        for (int c = 0; c < limit; ++c) {
            bool clash = false;
            for (Vertex u : g_.neighbors(v))
                if (color_[u] == c) {
                    clash = true;
                    break;
                }
            if (clash)
                continue;
            color_[v] = c;
            if (place(idx + 1, std::max(used, c + 1)))
                return true;
            color_[v] = -1;
        }
        return false;
    }

    const Graph& g_;
    int k_;
    std::vector<int> color_;
    std::vector<Vertex> order_;
};

} // namespace

int chromatic_bf(const Graph& g)
{
    require_at_most(g, kChromaticLimit, "chromatic_bf");
    if (g.order() == 0)
        return 0;
    for (int k = 1;; ++k)
        if (Colorer(g, k).run())
            return k;
}

int omega_bf(const Graph& g)
{
    require_at_most(g, kOmegaLimit, "omega_bf");
    const auto nb = neighbor_masks(g);
    int best = 0;
    std::function<void(int, Mask)> expand = [&](int size, Mask cand) {
        if (cand == 0) {
            best = std::max(best, size);
            return;
        }
        while (cand) {
            if (size + std::popcount(cand) <= best)
                return;
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            expand(size + 1, cand & nb[v]);
        }
        best = std::max(best, size);
    };
    Mask all = g.order() == 0 ? 0 : (g.order() == 64 ? ~Mask{0} : (Mask{1} << g.order()) - 1);
    expand(0, all);
    return best;
}

std::optional<MeynielObstruction> is_meyniel_bf(const Graph& g)
{
    require_at_most(g, kMeynielLimit, "is_meyniel_bf");
    const int n = g.order();
    std::vector<Vertex> path;
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);
    std::optional<MeynielObstruction> found;

    // `chords` counts adjacent non-consecutive pairs on the path, except the
    // pair (start, last) which would become a cycle edge on closing.
    std::function<bool(int)> dfs = [&](int chords) -> bool {
        const Vertex s = path.front();
        const Vertex last = path.back();
        const std::size_t len = path.size();
        if (len >= 5 && len % 2 == 1 && g.adjacent(last, s) && path[1] < last) {
            MeynielObstruction ob;
            ob.cycle = path;
            if (chords == 1) {
                for (std::size_t i = 0; i < len && !ob.chord; ++i)
                    for (std::size_t j = i + 2; j < len; ++j) {
                        if (i == 0 && j == len - 1)
                            continue;
                        if (g.adjacent(path[i], path[j])) {
                            ob.chord = make_chord(path[i], path[j]);
                            break;
                        }
                    }
            }
            found = std::move(ob);
            return true;
        }
        for (Vertex u : g.neighbors(last)) {
            if (u <= s || on_path[u])
                continue;
            int extra = (len >= 3 && g.adjacent(s, last)) ? 1 : 0;
            for (std::size_t k = 1; k + 1 < len; ++k)
                extra += g.adjacent(u, path[k]) ? 1 : 0;
            if (chords + extra >= 2)
                continue;
            path.push_back(u);
            on_path[u] = 1;
            if (dfs(chords + extra))
                return true;
            on_path[u] = 0;
            path.pop_back();
        }
        return false;
    };

    for (Vertex s = 0; s < n; ++s) {
        path.assign(1, s);
        on_path[s] = 1;
        if (dfs(0))
            return found;
        on_path[s] = 0;
    }
    return std::nullopt;
}

std::vector<std::vector<Vertex>> maximal_cliques(const Graph& g)
{
    require_at_most(g, kCliqueListLimit, "maximal_cliques");
    const auto nb = neighbor_masks(g);
    std::vector<std::vector<Vertex>> out;

    // Bron-Kerbosch with Tomita pivoting.
    std::function<void(Mask, Mask, Mask)> bk = [&](Mask r, Mask p, Mask x) {
        if (p == 0 && x == 0) {
            std::vector<Vertex> clique;
            for (Mask m = r; m; m &= m - 1)
                clique.push_back(std::countr_zero(m));
            out.push_back(std::move(clique));
            return;
        }
        Mask px = p | x;
        int pivot = std::countr_zero(px);
        int best = -1;
        for (Mask m = px; m; m &= m - 1) {
            int u = std::countr_zero(m);
            int cnt = std::popcount(p & nb[u]);
            if (cnt > best) {
                best = cnt;
                pivot = u;
            }
        }
        for (Mask m = p & ~nb[pivot]; m; m &= m - 1) {
            int v = std::countr_zero(m);
            Mask bit = Mask{1} << v;
            bk(r | bit, p & nb[v], x & nb[v]);
            p &= ~bit;
            x |= bit;
        }
    };
    if (g.order() > 0)
        bk(0, (Mask{1} << g.order()) - 1, 0);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_strong_stable_set(const Graph& g, std::span<const Vertex> s)
{
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] == s[j] || g.adjacent(s[i], s[j]))
                return false;
    std::vector<char> in_s(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : s)
        in_s[v] = 1;
    for (const auto& q : maximal_cliques(g))
        if (std::none_of(q.begin(), q.end(), [&](Vertex v) { return in_s[v] != 0; }))
            return false;
    return true;
}

} // namespace meyniel::oracle
