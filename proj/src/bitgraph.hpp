#pragma once

// Dense bitset graphs for the canonical labeling and enumeration kernels.
// Internal to the library.

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "zagreb/graph.hpp"

namespace zagreb::detail {

constexpr int kMaxBitVertices = 64;

inline constexpr std::uint64_t bit(int i) noexcept { return std::uint64_t{1} << i; }

inline constexpr std::uint64_t all_bits(int n) noexcept { return n >= 64 ? ~std::uint64_t{0} : bit(n) - 1; }

struct BitGraph {
    int n = 0;
    std::array<std::uint64_t, kMaxBitVertices> rows{};

    int degree(int v) const noexcept { return std::popcount(rows[v]); }
    bool adjacent(int u, int v) const noexcept { return (rows[u] >> v) & 1; }
};

BitGraph to_bitgraph(const Graph& g);
Graph to_graph(const BitGraph& g);

/// Upper-triangle adjacency bits in graph6 column order, packed MSB-first.
/// Lexicographic order on keys equals lexicographic order on graph6 strings.
struct AdjacencyKey {
    static constexpr int kWords = (kMaxBitVertices * (kMaxBitVertices - 1) / 2 + 63) / 64;
    std::array<std::uint64_t, kWords> words{};

    friend bool operator==(const AdjacencyKey&, const AdjacencyKey&) = default;
    friend auto operator<=>(const AdjacencyKey&, const AdjacencyKey&) = default;
};

using Permutation = std::array<int, kMaxBitVertices>;

struct CanonResult {
    Permutation order{};  // position -> vertex
    AdjacencyKey key;
    std::vector<Permutation> automorphisms;  // found during the search, not necessarily a generating set
};

CanonResult canonical_search(const BitGraph& g, std::span<const int> colors = {});

/// g relabeled so that vertex order[i] becomes i.
BitGraph apply_order(const BitGraph& g, const Permutation& order);

/// Vertices whose removal disconnects g (g assumed connected).
std::uint64_t cut_vertex_mask(const BitGraph& g);

}  // namespace zagreb::detail
