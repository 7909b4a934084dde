#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "zagreb/graph.hpp"

namespace zagreb {

struct CanonOptions {
    int max_vertices = 16;
};

/// Isomorphism-invariant key: the graph6 string of the canonically relabeled
/// graph, which is the lexicographically least graph6 string reachable by
/// the refinement search.
struct CanonicalForm {
    std::string key;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Canonical order: position i of the result holds the vertex that becomes
/// vertex i of the canonical graph. An optional vertex coloring restricts
/// the search to color-preserving relabelings (colors ordered ascending).
std::vector<Vertex> canonical_labeling(const Graph& g, std::span<const int> colors = {},
                                       const CanonOptions& options = {});

/// Relabels g into its canonical representative.
Graph canonical_graph(const Graph& g, const CanonOptions& options = {});

CanonicalForm canonical_form(const Graph& g, const CanonOptions& options = {});

bool is_isomorphic(const Graph& a, const Graph& b, const CanonOptions& options = {});

struct EnumerationOptions {
    int threads = 1;
    int max_vertices = 10;
};

/// Called once per isomorphism class with the canonical representative.
using GraphConsumer = std::function<void(const Graph&)>;

/// Orderly generation of connected graphs on n vertices by canonical vertex
/// augmentation. With threads > 1 the augmentation tree is split two levels
/// above the leaves and the consumer is invoked concurrently.
std::uint64_t enumerate_connected(int n, const GraphConsumer& consumer, const EnumerationOptions& options = {});

/// Same classes as enumerate_connected, but the consumer runs on the calling
/// thread in the single-threaded generation order, whatever the thread count.
std::uint64_t enumerate_connected_ordered(int n, const GraphConsumer& consumer,
                                          const EnumerationOptions& options = {});

}  // namespace zagreb
