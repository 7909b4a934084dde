#pragma once

#include <cstdint>

#include "zagreb/graph.hpp"

namespace zagreb {

using Index = std::int64_t;

struct IndexPair {
    Index m1 = 0;
    Index m2 = 0;

    friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

/// First Zagreb index: sum of squared degrees.
Index zagreb_m1(const Graph& g);

/// Second Zagreb index: sum over edges of the product of endpoint degrees.
Index zagreb_m2(const Graph& g);

inline IndexPair zagreb_indices(const Graph& g) { return {zagreb_m1(g), zagreb_m2(g)}; }

/// The claimed minima (4n+2, 4n+4) over connected n-vertex graphs with a
/// cycle and k >= 1 cut vertices. Reported as claimed, for the verifier to
/// compare against. Throws DomainTooSmall for n < 4.
IndexPair paper_lower_bounds(int n);

// Gap functions bounding the M2 decrease of the pendant-moving rewrites.
// Both are positive on [2, inf)^2; DomainError below 2.
Index gap_f(Index x, Index y);  // xy - x - y + 3
Index gap_g(Index x, Index y);  // xy - 2x - 2y + 5

}  // namespace zagreb
