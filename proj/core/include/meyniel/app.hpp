#pragma once

#include "meyniel/certificates.hpp"
#include "meyniel/graph.hpp"
#include "meyniel/lexcolor.hpp"

#include <stdexcept>
#include <variant>

namespace meyniel {

/// Internal invariant failure inside a pipeline: a bug, never a bad input.
class PipelineError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

using SolveCertificate = std::variant<OptimalCertificate, MeynielObstruction>;
using StableSetCertificate = std::variant<NiceStableSetCert, MeynielObstruction>;

/// A coloring and a clique of the same size, or a Meyniel obstruction.
/// Runs LexColor, then the clique greedy; on clique failure, extracts an
/// obstruction. O(n^2). The result is verified before return.
SolveCertificate robust_solve(const Graph& g, const TieBreak& tb = {}, Strategy strategy = Strategy::refined);

/// A nice stable set containing v, or a Meyniel obstruction. Colors with v
/// first and checks whether color class 1 is nice; a failing check yields a
/// bad path over the class-1 contraction. O(n^3).
StableSetCertificate robust_stable_set(const Graph& g, Vertex v);

/// Peels nice stable sets S_1, S_2, ... off the graph (anchored at the lowest
/// remaining vertex) and colors S_i with i; then extracts a matching clique.
/// Any obstruction met on the way is returned in the original vertex ids.
SolveCertificate color_via_stable_sets(const Graph& g);

inline Certificate as_certificate(const SolveCertificate& s)
{
    return std::visit([](const auto& c) -> Certificate { return c; }, s);
}

inline Certificate as_certificate(const StableSetCertificate& s)
{
    return std::visit([](const auto& c) -> Certificate { return c; }, s);
}

} // namespace meyniel
