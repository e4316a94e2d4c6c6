#include "meyniel/obstruction.hpp"

#include "meyniel/certify.hpp"

#include <algorithm>
#include <string>

namespace meyniel {

ContractionView::ContractionView(const Graph& g, const ColorTrace& trace, int color)
    : color_(color)
    , color_of_(trace.color_of)
{
    if (color < 1 || color > trace.num_colors())
        throw std::out_of_range("color " + std::to_string(color) + " not used by the trace");
    auto cls = trace.class_of(color);
    xs_.assign(cls.begin(), cls.end());
    first_nb_ = first_neighbor_index(g, xs_);
}

ContractionView build_view(const Graph& g, const ColorTrace& trace, int color)
{
    return ContractionView(g, trace, color);
}

BadPath initial_bad_path(const Graph& g, const ContractionView& view, const CliqueOutcome& fail)
{
    if (fail.complete || fail.failed_color != view.color())
        throw ObstructionError("initial_bad_path: view does not match the clique failure");
    const auto& q = fail.clique;
    if (q.empty())
        throw ObstructionError("initial_bad_path: empty clique cannot fail");

    int h = 0;
    for (Vertex u : q) {
        if (view.first_nb(u) == 0)
            throw ObstructionError("initial_bad_path: clique vertex without a neighbor of the failed color");
        h = std::max(h, view.first_nb(u));
    }
    if (h < 2)
        throw ObstructionError("initial_bad_path: x_1 is adjacent to the whole clique");

    const Vertex xh = view.x(h);
    Vertex a = -1, b = -1;
    for (Vertex u : q) {
        if (!g.adjacent(u, xh)) {
            if (a < 0 || u < a)
                a = u;
        } else if (view.first_nb(u) >= h) {
            if (b < 0 || u < b)
                b = u;
        }
    }
    if (a < 0 || b < 0)
        throw ObstructionError("initial_bad_path: no valid a/b in the failed clique");
    return BadPath{h, {a, b, xh}, std::nullopt};
}

Vertex find_z(const Graph& g, const ColorTrace& trace, const ContractionView& view, const BadPath& bp)
{
    const int i = bp.index;
    const Vertex xi = view.x(i);
    const Vertex v1 = bp.v(1);
    const Vertex vr = bp.chord == 2 ? bp.v(3) : bp.v(2);
    const int c = view.color();

    Vertex best = -1;
    for (Vertex u : g.neighbors(xi)) {
        if (trace.step_of[u] >= trace.step_of[xi] || trace.color_of[u] <= c)
            continue;
        if (!view.adjacent_to_w(u, i - 1))
            continue;
        if (g.adjacent(u, v1) && g.adjacent(u, vr))
            continue;
        if (best < 0 || trace.step_of[u] < trace.step_of[best])
            best = u;
    }
    if (best < 0)
        throw ObstructionError("no apex candidate adjacent to x_" + std::to_string(i));
    return best;
}

std::variant<BadPath, NearObstruction> reduce_bad_path(const Graph& g, const ContractionView& view,
                                                       const BadPath& bp, Vertex z)
{
    auto v = [&bp](int k) { return bp.v(k); };
    auto sees = [&g, z](Vertex u) { return g.adjacent(z, u); };
    const std::optional<int> t = bp.chord;

    const int j = std::max(view.first_nb(v(1)), view.first_nb(z));
    const Vertex xj = view.x(j);

    if (g.adjacent(xj, v(1)) && g.adjacent(xj, z)) {
        NearObstruction no;
        no.verts.reserve(bp.verts.size() + 1);
        no.verts.push_back(xj);
        no.verts.insert(no.verts.end(), bp.verts.begin(), bp.verts.end());
        no.chord = t;
        no.apex = z;
        no.kind = t == 2 ? 2 : (!sees(v(1)) ? 3 : 4);
        return no;
    }

    // (a): z sees x_j but not w_{j-1}; (b): v_1 sees x_j but not w_{j-1}.
    const bool orient_a = g.adjacent(xj, z);

    int k = 1;
    while (!sees(v(k)))
        ++k;

    auto near_suffix = [&](std::optional<int> chord, int kind) {
        NearObstruction no;
        no.verts.assign(bp.verts.begin() + (k - 1), bp.verts.end());
        no.chord = chord;
        no.apex = z;
        no.kind = kind;
        return no;
    };

    // Interior of the new bad path in orientation (a), i.e. the part between
    // w_{j-1} and x_j, plus its chord position within the new path.
    std::vector<Vertex> mid;
    std::optional<int> mid_chord;
    auto take = [&](int from, int to) {
        for (int q = from; q <= to; ++q)
            mid.push_back(v(q));
    };

    if (k % 2 == 1) {
        take(1, k);
        mid.push_back(z);
        if (t && *t + 1 <= k)
            mid_chord = t;
    } else if (t && *t < k) {  // chord lies before v_k: skip v_t
        take(1, *t - 1);
        take(*t + 1, k);
        mid.push_back(z);
    } else if (t == k) {  // chord v_{k-1}v_{k+1}
        if (!sees(v(k + 1)))
            return near_suffix(std::nullopt, 3);
        if (!sees(v(k + 2)))
            return near_suffix(std::nullopt, 4);
        take(1, k - 1);
        mid.push_back(v(k + 1));
        mid.push_back(v(k + 2));
        mid.push_back(z);
        mid_chord = k + 1;  // z v_{k+1}
    } else if (t == k + 1) {  // chord v_k v_{k+2}
        if (sees(v(k + 1))) {
            take(1, k + 1);
        } else if (sees(v(k + 2))) {
            take(1, k);
            mid.push_back(v(k + 2));
        } else {
            return near_suffix(1, 1);
        }
        mid.push_back(z);
        mid_chord = k + 1;  // z v_k
    } else {  // no chord v_{t-1}v_{t+1} with t <= k+1
        if (!sees(v(k + 1)))
            return near_suffix(t ? std::optional<int>(*t - k) : std::nullopt, 3);
        take(1, k + 1);
        mid.push_back(z);
        mid_chord = k + 1;  // z v_k
    }

    BadPath next;
    next.index = j;
    const int new_len = static_cast<int>(mid.size()) + 1;
    if (!orient_a) {
        std::reverse(mid.begin(), mid.end());
        if (mid_chord)
            mid_chord = new_len - *mid_chord;
    }
    next.verts = std::move(mid);
    next.verts.push_back(xj);
    next.chord = mid_chord;
    return next;
}

NearObstruction bad_path_to_near(const Graph& g, const ColorTrace& trace, const ContractionView& view,
                                 BadPath bp, int* steps)
{
    int count = 0;
    for (;;) {
        ++count;
        if (count > view.class_size() + 1)
            throw ObstructionError("bad path reduction did not terminate");
        Vertex z = find_z(g, trace, view, bp);
        auto next = reduce_bad_path(g, view, bp, z);
        if (auto* no = std::get_if<NearObstruction>(&next)) {
            if (steps)
                *steps = count;
            return std::move(*no);
        }
        auto& nb = std::get<BadPath>(next);
        if (nb.index >= bp.index)
            throw ObstructionError("bad path index did not decrease");
        bp = std::move(nb);
    }
}

MeynielObstruction near_to_obstruction(const Graph& g, NearObstruction no)
{
    for (;;) {
        const auto& P = no.verts;
        const int p = no.length();
        const Vertex z = no.apex;
        const std::optional<int> t = no.chord;
        auto v = [&P](int k) { return P[static_cast<std::size_t>(k)]; };
        auto sees = [&g, z](Vertex u) { return g.adjacent(z, u); };

        MeynielObstruction out;
        auto cyc = [&out](std::initializer_list<Vertex> vs) { out.cycle.insert(out.cycle.end(), vs); };
        auto run = [&out, &v](int from, int to) {
            for (int q = from; q <= to; ++q)
                out.cycle.push_back(v(q));
        };
        auto descend = [&no](std::vector<Vertex> verts, std::optional<int> chord, int kind) {
            no.verts = std::move(verts);
            no.chord = chord;
            no.kind = kind;
        };
        auto suffix = [&P](int from) { return std::vector<Vertex>(P.begin() + from, P.end()); };

        if (p == 3) {
            cyc({z, v(0), v(1), v(2), v(3)});
            if (t == 1)
                out.chord = make_chord(v(0), v(2));
            else if (sees(v(1)))
                out.chord = make_chord(z, v(1));
            else if (sees(v(2)))
                out.chord = make_chord(z, v(2));
            return out;
        }

        int r = no.kind == 4 ? 3 : 1;
        while (!sees(v(r)))
            ++r;

        switch (no.kind) {
        case 1:
            if (r % 2 == 1) {
                out.cycle.push_back(z);
                run(0, r);
                out.chord = make_chord(v(0), v(2));
            } else {
                cyc({z, v(0)});
                run(2, r);
            }
            return out;

        case 2:
            if (!sees(v(1)) && !sees(v(2))) {  // z misses v_1, v_2
                if (r % 2 == 1) {
                    out.cycle.push_back(z);
                    run(0, r);
                    out.chord = make_chord(v(1), v(3));
                } else {
                    cyc({z, v(0), v(1)});
                    run(3, r);
                }
                return out;
            }
            if (!sees(v(1))) {  // z misses v_1, sees v_2
                if (!sees(v(3))) {
                    cyc({z, v(0), v(1), v(3), v(2)});
                    out.chord = make_chord(v(1), v(2));
                    return out;
                }
                if (sees(v(4))) {
                    cyc({z, v(0), v(1), v(3), v(4)});
                    out.chord = make_chord(z, v(3));
                    return out;
                }
                descend(suffix(2), std::nullopt, 4);
                continue;
            }
            {  // z sees v_1, so misses v_3
                std::vector<Vertex> next{v(1)};
                next.insert(next.end(), P.begin() + 3, P.end());
                descend(std::move(next), std::nullopt, 3);
            }
            continue;

        case 3:
            if (r % 2 == 1) {
                out.cycle.push_back(z);
                run(0, r);
                if (t && *t + 1 <= r)
                    out.chord = make_chord(v(*t - 1), v(*t + 1));
                return out;
            }
            if (t && *t < r) {  // chord before v_r
                out.cycle.push_back(z);
                run(0, *t - 1);
                run(*t + 1, r);
                return out;
            }
            if (t == r) {  // chord v_{r-1}v_{r+1}
                if (!sees(v(r + 1))) {
                    out.cycle.push_back(z);
                    run(0, r - 1);
                    cyc({v(r + 1), v(r)});
                    out.chord = make_chord(v(r - 1), v(r));
                    return out;
                }
                if (sees(v(r + 2))) {
                    out.cycle.push_back(z);
                    run(0, r - 1);
                    cyc({v(r + 1), v(r + 2)});
                    out.chord = make_chord(z, v(r + 1));
                    return out;
                }
                descend(suffix(r), std::nullopt, 4);
                continue;
            }
            if (t == r + 1) {  // chord v_r v_{r+2}
                if (sees(v(r + 1))) {
                    out.cycle.push_back(z);
                    run(0, r + 1);
                    out.chord = make_chord(z, v(r));
                    return out;
                }
                if (sees(v(r + 2))) {
                    out.cycle.push_back(z);
                    run(0, r);
                    out.cycle.push_back(v(r + 2));
                    out.chord = make_chord(z, v(r));
                    return out;
                }
                descend(suffix(r), 1, 1);
                continue;
            }
            // no chord v_{t-1}v_{t+1} with t <= r+1
            if (sees(v(r + 1))) {
                out.cycle.push_back(z);
                run(0, r + 1);
                out.chord = make_chord(z, v(r));
                return out;
            }
            descend(suffix(r), t ? std::optional<int>(*t - r) : std::nullopt, 3);
            continue;

        case 4:
            if (t && *t > 2 && *t < r) {
                out.cycle.push_back(z);
                if (r % 2 == 1) {
                    run(1, *t - 1);
                    run(*t + 1, r);
                } else {
                    run(1, r);
                    out.chord = make_chord(v(*t - 1), v(*t + 1));
                }
                return out;
            }
            out.cycle.push_back(z);
            if (r % 2 == 1) {
                run(0, r);
                out.chord = make_chord(z, v(1));
            } else {
                run(1, r);
            }
            return out;

        default:
            throw ObstructionError("near-obstruction of unknown kind " + std::to_string(no.kind));
        }
    }
}

MeynielObstruction extract_obstruction(const Graph& g, const ColorTrace& trace, const CliqueOutcome& fail)
{
    ContractionView view(g, trace, fail.failed_color);
    BadPath bp = initial_bad_path(g, view, fail);
    NearObstruction no = bad_path_to_near(g, trace, view, std::move(bp));
    MeynielObstruction ob = near_to_obstruction(g, std::move(no));
    if (auto verdict = verify_obstruction(g, ob); !verdict)
        throw ObstructionError("extracted obstruction failed verification: " + verdict.reason);
    return ob;
}

} // namespace meyniel
