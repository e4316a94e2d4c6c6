#include "checkers.hpp"

#include "meyniel/app.hpp"
#include "meyniel/certify.hpp"
#include "meyniel/generate.hpp"
#include "meyniel/niceset.hpp"
#include "meyniel/oracle.hpp"

#include <doctest.h>

using namespace meyniel;

namespace {

std::set<Vertex> vertex_set(const std::vector<Vertex>& vs) { return {vs.begin(), vs.end()}; }

} // namespace

TEST_CASE("robust_solve on p6bar with the forced order")
{
    using namespace p6;
    Graph g = p6bar();
    SolveCertificate s = robust_solve(g, TieBreak::forced({v, y, w, u, x, z}));
    REQUIRE(std::holds_alternative<MeynielObstruction>(s));
    const auto& ob = std::get<MeynielObstruction>(s);
    CHECK(vertex_set(ob.cycle) == std::set<Vertex>{u, v, w, x, y});
    CHECK(ob.chord == make_chord(u, y));
}

TEST_CASE("robust_solve small cases")
{
    SolveCertificate one = robust_solve(Graph::build(1, {}));
    REQUIRE(std::holds_alternative<OptimalCertificate>(one));
    CHECK(std::get<OptimalCertificate>(one).num_colors() == 1);
    CHECK(std::get<OptimalCertificate>(one).clique.size() == 1);

    SolveCertificate empty = robust_solve(Graph::build(0, {}));
    REQUIRE(std::holds_alternative<OptimalCertificate>(empty));
    CHECK(std::get<OptimalCertificate>(empty).clique.empty());

    // Optimal is allowed on a non-Meyniel graph
    using namespace s5;
    SolveCertificate s = robust_solve(sec5(), TieBreak::forced({d, b, f, g, c, i, h, a, e}));
    REQUIRE(std::holds_alternative<OptimalCertificate>(s));
    CHECK(vertex_set(std::get<OptimalCertificate>(s).clique) == std::set<Vertex>{a, d, e});
}

TEST_CASE("robust_solve is total and agrees with the oracles")
{
    int opt = 0, obs = 0;
    for (std::uint64_t seed = 0; seed < 1500; ++seed) {
        const int n = 1 + static_cast<int>(seed % 12);
        Graph g = testing::gnp(n, 0.1 + 0.8 * static_cast<double>(seed % 9) / 8.0, seed);
        SolveCertificate s = robust_solve(g, {}, seed % 2 ? Strategy::naive : Strategy::refined);
        CHECK(verify(g, as_certificate(s)).ok);
        if (auto* o = std::get_if<OptimalCertificate>(&s)) {
            ++opt;
            CHECK(o->num_colors() == oracle::chromatic_bf(g));
            CHECK(o->num_colors() == oracle::omega_bf(g));
        } else {
            ++obs;
            if (n <= oracle::kMeynielLimit)
                CHECK(oracle::is_meyniel_bf(g).has_value());
        }
    }
    CHECK(opt > 100);
    CHECK(obs > 100);
}

TEST_CASE("robust_solve on chordal graphs is optimal")
{
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        Graph g = testing::family(Family::chordal, 1 + static_cast<int>(seed % 12), 0.5, seed);
        SolveCertificate s = robust_solve(g);
        REQUIRE(std::holds_alternative<OptimalCertificate>(s));
        const int k = std::get<OptimalCertificate>(s).num_colors();
        CHECK(k == oracle::chromatic_bf(g));
        CHECK(k == oracle::omega_bf(g));
    }
}

TEST_CASE("robust_stable_set basics")
{
    Graph c5 = generate({Family::cycle, 5, 0, 0, {}});
    for (Vertex v = 0; v < 5; ++v) {
        StableSetCertificate s = robust_stable_set(c5, v);
        REQUIRE(std::holds_alternative<MeynielObstruction>(s));
        CHECK(vertex_set(std::get<MeynielObstruction>(s).cycle) == std::set<Vertex>{0, 1, 2, 3, 4});
    }
    Graph e = generate({Family::edgeless, 6, 0, 0, {}});
    StableSetCertificate s = robust_stable_set(e, 4);
    REQUIRE(std::holds_alternative<NiceStableSetCert>(s));
    CHECK(vertex_set(std::get<NiceStableSetCert>(s).order) == std::set<Vertex>{0, 1, 2, 3, 4, 5});
    CHECK_THROWS_AS(robust_stable_set(e, 6), std::out_of_range);
}

TEST_CASE("robust_stable_set on chordal graphs is strong and anchored")
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Graph g = testing::family(Family::chordal, 1 + static_cast<int>(seed % 12), 0.4, seed);
        for (Vertex v = 0; v < g.order(); ++v) {
            StableSetCertificate s = robust_stable_set(g, v);
            REQUIRE(std::holds_alternative<NiceStableSetCert>(s));
            const auto& order = std::get<NiceStableSetCert>(s).order;
            CHECK(std::find(order.begin(), order.end(), v) != order.end());
            CHECK(nice_check(g, order).nice());
            CHECK(oracle::is_strong_stable_set(g, order));
        }
    }
}

TEST_CASE("robust_stable_set on random graphs")
{
    int obs = 0;
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        Graph g = testing::gnp(1 + static_cast<int>(seed % 12), 0.5, seed);
        for (Vertex v = 0; v < g.order(); ++v) {
            StableSetCertificate s = robust_stable_set(g, v);
            CHECK(verify(g, as_certificate(s)).ok);
            if (auto* nice = std::get_if<NiceStableSetCert>(&s)) {
                CHECK(std::find(nice->order.begin(), nice->order.end(), v) != nice->order.end());
                CHECK(oracle::is_strong_stable_set(g, nice->order));
            } else {
                ++obs;
                if (g.order() <= oracle::kMeynielLimit)
                    CHECK(oracle::is_meyniel_bf(g).has_value());
            }
        }
    }
    CHECK(obs > 50);
}

TEST_CASE("color_via_stable_sets")
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Graph b = testing::family(Family::bipartite, 2 + static_cast<int>(seed % 30), 0.3, seed);
        SolveCertificate s = color_via_stable_sets(b);
        REQUIRE(std::holds_alternative<OptimalCertificate>(s));
        CHECK(std::get<OptimalCertificate>(s).num_colors() == (b.edge_count() ? 2 : 1));

        Graph c = testing::family(Family::chordal, 1 + static_cast<int>(seed % 12), 0.5, seed);
        SolveCertificate sc = color_via_stable_sets(c);
        REQUIRE(std::holds_alternative<OptimalCertificate>(sc));
        CHECK(std::get<OptimalCertificate>(sc).num_colors() == oracle::chromatic_bf(c));

        Graph g = testing::gnp(1 + static_cast<int>(seed % 12), 0.5, seed);
        SolveCertificate sg = color_via_stable_sets(g);
        CHECK(verify(g, as_certificate(sg)).ok);
        if (std::holds_alternative<MeynielObstruction>(sg) && g.order() <= oracle::kMeynielLimit)
            CHECK(oracle::is_meyniel_bf(g).has_value());
    }
    CHECK(verify(p6bar(), as_certificate(color_via_stable_sets(p6bar()))).ok);
    CHECK(verify(sec5(), as_certificate(color_via_stable_sets(sec5()))).ok);
}

TEST_CASE("pipelines at larger sizes still verify")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = testing::gnp(60 + static_cast<int>(seed) * 7, 0.3, seed);
        CHECK(verify(g, as_certificate(robust_solve(g))).ok);
        CHECK(verify(g, as_certificate(color_via_stable_sets(g))).ok);
        Graph c = testing::family(Family::chordal, 150, 0.5, seed);
        CHECK(std::holds_alternative<OptimalCertificate>(robust_solve(c)));
        CHECK(std::holds_alternative<OptimalCertificate>(color_via_stable_sets(c)));
    }
}
