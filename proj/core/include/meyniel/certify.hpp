#pragma once

// Certificate checkers. Nothing here depends on the producers (LexColor,
// clique greedy, contraction views); every check works from the graph and the
// certificate alone.

#include "meyniel/certificates.hpp"
#include "meyniel/graph.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace meyniel {

/// Outcome of a check; `reason` names the first violation found.
struct Verdict {
    bool ok = true;
    std::string reason;

    static Verdict pass() { return {}; }
    static Verdict fail(std::string why) { return {false, std::move(why)}; }
    explicit operator bool() const noexcept { return ok; }
};

/// Proper, total, and using exactly the colors 1..k.
Verdict verify_coloring(const Graph& g, std::span<const int> coloring);
Verdict verify_clique(const Graph& g, std::span<const Vertex> clique);
Verdict verify_obstruction(const Graph& g, const MeynielObstruction& ob);
Verdict verify_optimal_pair(const Graph& g, std::span<const int> coloring, std::span<const Vertex> clique);
/// Maximal stable set whose order admits no induced P4 from a prefix contraction.
Verdict verify_nice_stable_set(const Graph& g, std::span<const Vertex> order);

Verdict verify(const Graph& g, const Certificate& cert);

class CertificateError : public std::runtime_error {
public:
    enum class Kind { malformed, verification_failed };
    CertificateError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// JSON document, one of
///   {"kind":"optimal","coloring":[...],"clique":[...]}
///   {"kind":"obstruction","cycle":[...],"chord":[u,v]|null}
///   {"kind":"nice_stable_set","order":[...]}
std::string encode(const Certificate& cert);

/// Parses and re-verifies against g. Throws CertificateError.
Certificate decode(const Graph& g, std::string_view text);

/// Parses without verification. Throws CertificateError(malformed).
Certificate decode_unchecked(std::string_view text);

} // namespace meyniel
