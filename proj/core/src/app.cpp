#include "meyniel/app.hpp"

#include "meyniel/certify.hpp"
#include "meyniel/clique.hpp"
#include "meyniel/niceset.hpp"
#include "meyniel/obstruction.hpp"

#include <numeric>
#include <string>

namespace meyniel {

namespace {

template <typename Cert>
const Cert& checked(const Graph& g, const Cert& cert, const char* where)
{
    if (auto v = verify(g, Certificate{cert}); !v)
        throw PipelineError(std::string(where) + ": produced an invalid certificate: " + v.reason);
    return cert;
}

} // namespace

SolveCertificate robust_solve(const Graph& g, const TieBreak& tb, Strategy strategy)
{
    const ColorTrace trace = lex_color(g, tb, strategy);
    const CliqueOutcome outcome = greedy_clique(g, trace);
    if (outcome.complete)
        return checked(g, OptimalCertificate{trace.color_of, outcome.clique}, "robust_solve");
    return extract_obstruction(g, trace, outcome);
}

StableSetCertificate robust_stable_set(const Graph& g, Vertex v)
{
    if (v < 0 || v >= g.order())
        throw std::out_of_range("vertex " + std::to_string(v) + " not in graph");
    const ColorTrace trace = lex_color(g, TieBreak::starting_with(v));
    const auto s = trace.class_of(1);

    const NiceCheck check = nice_check(g, s);
    if (check.nice())
        return checked(g, NiceStableSetCert{{s.begin(), s.end()}}, "robust_stable_set");
    if (!check.witness)
        throw PipelineError("robust_stable_set: color class 1 is not a maximal stable set");

    const auto& w = *check.witness;
    ContractionView view(g, trace, 1);
    BadPath bp{w.index, {w.a, w.b, view.x(w.index)}, std::nullopt};
    MeynielObstruction ob = near_to_obstruction(g, bad_path_to_near(g, trace, view, std::move(bp)));
    return checked(g, ob, "robust_stable_set");
}

SolveCertificate color_via_stable_sets(const Graph& g)
{
    const int n = g.order();
    std::vector<Vertex> remaining(static_cast<std::size_t>(n));
    std::iota(remaining.begin(), remaining.end(), 0);
    std::vector<std::vector<Vertex>> classes;

    while (!remaining.empty()) {
        const Graph sub = g.induced(remaining);
        StableSetCertificate round = robust_stable_set(sub, 0);
        if (auto* ob = std::get_if<MeynielObstruction>(&round)) {
            MeynielObstruction lifted;
            for (Vertex u : ob->cycle)
                lifted.cycle.push_back(remaining[u]);
            if (ob->chord)
                lifted.chord = make_chord(remaining[ob->chord->first], remaining[ob->chord->second]);
            return checked(g, lifted, "color_via_stable_sets");
        }
        const auto& nice = std::get<NiceStableSetCert>(round);
        std::vector<char> taken(remaining.size(), 0);
        std::vector<Vertex> cls;
        for (Vertex u : nice.order) {
            cls.push_back(remaining[u]);
            taken[u] = 1;
        }
        classes.push_back(std::move(cls));
        std::vector<Vertex> rest;
        for (std::size_t i = 0; i < remaining.size(); ++i)
            if (!taken[i])
                rest.push_back(remaining[i]);
        remaining = std::move(rest);
    }

    const ColorTrace coloring = ColorTrace::from_classes(n, std::move(classes));
    const CliqueOutcome outcome = greedy_clique(g, coloring);
    if (!outcome.complete)
        throw PipelineError("color_via_stable_sets: clique greedy failed on a strong-stable-set coloring");
    return checked(g, OptimalCertificate{coloring.color_of, outcome.clique}, "color_via_stable_sets");
}

} // namespace meyniel
