#include "zagreb/indices.hpp"

#include <string>

namespace zagreb {

Index zagreb_m1(const Graph& g) {
    Index total = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        const Index d = degree(g, v);
        total += d * d;
    }
    return total;
}

Index zagreb_m2(const Graph& g) {
    Index total = 0;
    for (const auto& [u, v] : g.edges()) total += Index{degree(g, u)} * degree(g, v);
    return total;
}

IndexPair paper_lower_bounds(int n) {
    if (n < 4) {
        throw Error(ErrorCode::DomainTooSmall,
                    "n=" + std::to_string(n) + ": no graph with a cycle and a cut vertex has fewer than 4 vertices");
    }
    return {4 * Index{n} + 2, 4 * Index{n} + 4};
}

namespace {

void check_gap_domain(Index x, Index y) {
    if (x < 2 || y < 2) {
        throw Error(ErrorCode::DomainError, "gap arguments must be >= 2, got (" + std::to_string(x) + ", " +
                                                std::to_string(y) + ")");
    }
}

}  // namespace

Index gap_f(Index x, Index y) {
    check_gap_domain(x, y);
    return x * y - x - y + 3;
}

Index gap_g(Index x, Index y) {
    check_gap_domain(x, y);
    return x * y - 2 * x - 2 * y + 5;
}

}  // namespace zagreb
