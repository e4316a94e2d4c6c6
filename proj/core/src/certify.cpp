#include "meyniel/certify.hpp"

#include <json.hpp>

#include <algorithm>
#include <vector>

namespace meyniel {

namespace {

std::string pair_str(Vertex a, Vertex b)
{
    return std::to_string(a) + "-" + std::to_string(b);
}

Verdict distinct_in_range(const Graph& g, std::span<const Vertex> vs)
{
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : vs) {
        if (v < 0 || v >= g.order())
            return Verdict::fail("vertex " + std::to_string(v) + " out of range");
        if (seen[v])
            return Verdict::fail("repeated vertex " + std::to_string(v));
        seen[v] = 1;
    }
    return Verdict::pass();
}

} // namespace

Verdict verify_coloring(const Graph& g, std::span<const int> coloring)
{
    const int n = g.order();
    if (static_cast<int>(coloring.size()) != n)
        return Verdict::fail("coloring has " + std::to_string(coloring.size()) + " entries for "
                             + std::to_string(n) + " vertices");
    int k = 0;
    for (int c : coloring) {
        if (c < 1)
            return Verdict::fail("color " + std::to_string(c) + " out of range");
        if (c > n)  // n vertices cannot cover 1..c
            return Verdict::fail("color gap: color " + std::to_string(c) + " exceeds the vertex count");
        k = std::max(k, c);
    }
    std::vector<char> used(static_cast<std::size_t>(k) + 1, 0);
    for (int c : coloring)
        used[c] = 1;
    for (int c = 1; c <= k; ++c)
        if (!used[c])
            return Verdict::fail("color gap: color " + std::to_string(c) + " unused");
    for (auto [u, v] : g.edges())
        if (coloring[u] == coloring[v])
            return Verdict::fail("monochromatic edge " + pair_str(u, v));
    return Verdict::pass();
}

Verdict verify_clique(const Graph& g, std::span<const Vertex> clique)
{
    if (auto d = distinct_in_range(g, clique); !d)
        return d;
    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j)
            if (!g.adjacent(clique[i], clique[j]))
                return Verdict::fail("clique vertices not adjacent: " + pair_str(clique[i], clique[j]));
    return Verdict::pass();
}

Verdict verify_obstruction(const Graph& g, const MeynielObstruction& ob)
{
    const auto& cyc = ob.cycle;
    const std::size_t len = cyc.size();
    if (auto d = distinct_in_range(g, cyc); !d)
        return d;
    if (len % 2 == 0)
        return Verdict::fail("even cycle");
    if (len < 5)
        return Verdict::fail("cycle shorter than 5");
    for (std::size_t i = 0; i < len; ++i) {
        Vertex a = cyc[i], b = cyc[(i + 1) % len];
        if (!g.adjacent(a, b))
            return Verdict::fail("missing cycle edge " + pair_str(a, b));
    }

    std::vector<Edge> chords;
    for (std::size_t i = 0; i < len; ++i)
        for (std::size_t j = i + 2; j < len; ++j) {
            if (i == 0 && j == len - 1)
                continue;
            if (g.adjacent(cyc[i], cyc[j]))
                chords.emplace_back(std::min(cyc[i], cyc[j]), std::max(cyc[i], cyc[j]));
        }

    if (ob.chord) {
        Edge declared{std::min(ob.chord->first, ob.chord->second), std::max(ob.chord->first, ob.chord->second)};
        if (chords.size() > 1)
            return Verdict::fail("more than one chord");
        if (chords.empty() || chords.front() != declared)
            return Verdict::fail("declared chord " + pair_str(declared.first, declared.second) + " is not a chord");
        return Verdict::pass();
    }
    if (chords.size() > 1)
        return Verdict::fail("more than one chord");
    if (!chords.empty())
        return Verdict::fail("undeclared chord " + pair_str(chords.front().first, chords.front().second));
    return Verdict::pass();
}

Verdict verify_optimal_pair(const Graph& g, std::span<const int> coloring, std::span<const Vertex> clique)
{
    if (auto v = verify_coloring(g, coloring); !v)
        return v;
    if (auto v = verify_clique(g, clique); !v)
        return v;
    int k = coloring.empty() ? 0 : *std::max_element(coloring.begin(), coloring.end());
    if (k != static_cast<int>(clique.size()))
        return Verdict::fail("size mismatch: " + std::to_string(k) + " colors vs clique of "
                             + std::to_string(clique.size()));
    return Verdict::pass();
}

Verdict verify_nice_stable_set(const Graph& g, std::span<const Vertex> order)
{
    const int n = g.order();
    if (auto d = distinct_in_range(g, order); !d)
        return d;
    std::vector<char> in_s(static_cast<std::size_t>(n), 0);
    for (Vertex s : order)
        in_s[s] = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j)
            if (g.adjacent(order[i], order[j]))
                return Verdict::fail("not stable: " + pair_str(order[i], order[j]));
    for (Vertex u = 0; u < n; ++u) {
        if (in_s[u])
            continue;
        bool covered = std::any_of(order.begin(), order.end(), [&](Vertex s) { return g.adjacent(u, s); });
        if (!covered)
            return Verdict::fail("not maximal: vertex " + std::to_string(u) + " has no neighbor in the set");
    }

    // sees_prefix[u]: u adjacent to one of order[0..i-1]
    std::vector<char> sees_prefix(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Vertex si = order[i];
        if (i > 0) {
            for (Vertex a = 0; a < n; ++a) {
                if (!sees_prefix[a] || g.adjacent(a, si))
                    continue;
                for (Vertex b = 0; b < n; ++b) {
                    if (b == a || sees_prefix[b] || !g.adjacent(a, b) || !g.adjacent(b, si))
                        continue;
                    return Verdict::fail("induced P4 at position " + std::to_string(i + 1) + " through "
                                         + pair_str(a, b));
                }
            }
        }
        for (Vertex u = 0; u < n; ++u)
            if (g.adjacent(u, si))
                sees_prefix[u] = 1;
    }
    return Verdict::pass();
}

Verdict verify(const Graph& g, const Certificate& cert)
{
    return std::visit(
        [&g](const auto& c) -> Verdict {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, OptimalCertificate>)
                return verify_optimal_pair(g, c.coloring, c.clique);
            else if constexpr (std::is_same_v<T, MeynielObstruction>)
                return verify_obstruction(g, c);
            else
                return verify_nice_stable_set(g, c.order);
        },
        cert);
}

using json = nlohmann::ordered_json;

std::string encode(const Certificate& cert)
{
    json doc;
    std::visit(
        [&doc](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, OptimalCertificate>) {
                doc["kind"] = "optimal";
                doc["coloring"] = c.coloring;
                doc["clique"] = c.clique;
            } else if constexpr (std::is_same_v<T, MeynielObstruction>) {
                doc["kind"] = "obstruction";
                doc["cycle"] = c.cycle;
                doc["chord"] = c.chord ? json::array({c.chord->first, c.chord->second}) : json(nullptr);
            } else {
                doc["kind"] = "nice_stable_set";
                doc["order"] = c.order;
            }
        },
        cert);
    return doc.dump() + "\n";
}

Certificate decode_unchecked(std::string_view text)
{
    using Kind = CertificateError::Kind;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw CertificateError(Kind::malformed, std::string("malformed certificate: ") + e.what());
    }
    try {
        if (!doc.is_object() || !doc.contains("kind"))
            throw CertificateError(Kind::malformed, "malformed certificate: missing \"kind\"");
        const auto kind = doc.at("kind").get<std::string>();
        if (kind == "optimal") {
            OptimalCertificate c;
            c.coloring = doc.at("coloring").get<std::vector<int>>();
            c.clique = doc.at("clique").get<std::vector<Vertex>>();
            return c;
        }
        if (kind == "obstruction") {
            MeynielObstruction c;
            c.cycle = doc.at("cycle").get<std::vector<Vertex>>();
            const auto& chord = doc.at("chord");
            if (!chord.is_null()) {
                auto ends = chord.get<std::vector<Vertex>>();
                if (ends.size() != 2)
                    throw CertificateError(Kind::malformed, "malformed certificate: chord must have two ends");
                c.chord = Edge{ends[0], ends[1]};
            }
            return c;
        }
        if (kind == "nice_stable_set")
            return NiceStableSetCert{doc.at("order").get<std::vector<Vertex>>()};
        throw CertificateError(Kind::malformed, "malformed certificate: unknown kind '" + kind + "'");
    } catch (const json::exception& e) {
        throw CertificateError(Kind::malformed, std::string("malformed certificate: ") + e.what());
    }
}

Certificate decode(const Graph& g, std::string_view text)
{
    Certificate cert = decode_unchecked(text);
    if (auto v = verify(g, cert); !v)
        throw CertificateError(CertificateError::Kind::verification_failed, "verification failed: " + v.reason);
    return cert;
}

} // namespace meyniel
