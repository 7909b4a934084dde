#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zagreb/error.hpp"

namespace zagreb {

using Vertex = std::int32_t;

struct Edge {
    Vertex u;
    Vertex v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeList = std::vector<Edge>;

/// Simple undirected graph on the dense vertex ids 0..n-1.
///
/// Values are immutable once constructed: every editing primitive below is a
/// free function returning a new graph, so a Graph can be shared freely
/// between threads. Neighbor lists are kept sorted.
class Graph {
public:
    Graph() = default;

    int order() const noexcept { return static_cast<int>(adjacency_.size()); }
    int size() const noexcept { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const;
    bool has_edge(Vertex u, Vertex v) const;

    /// Edges as (u, v) with u < v, in lexicographic order.
    EdgeList edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    explicit Graph(std::vector<std::vector<Vertex>> adjacency);

    void check_vertex(Vertex v) const;

    std::vector<std::vector<Vertex>> adjacency_;
    int edge_count_ = 0;

    friend Graph build(int n, const EdgeList& edges);
    friend Graph remove_edge(const Graph& g, Vertex u, Vertex v);
    friend Graph add_edge(const Graph& g, Vertex u, Vertex v);
    friend Graph subdivide_edge(const Graph& g, Vertex u, Vertex v);
    friend Graph relabel(const Graph& g, std::span<const Vertex> new_id);
    friend int degree(const Graph& g, Vertex v);
};

/// Throws VertexOutOfRange, SelfLoop or DuplicateEdge; rejects n < 1.
Graph build(int n, const EdgeList& edges);

int degree(const Graph& g, Vertex v);

/// Throws EmptyGraph when g has no vertices.
bool is_connected(const Graph& g);

Graph remove_edge(const Graph& g, Vertex u, Vertex v);
Graph add_edge(const Graph& g, Vertex u, Vertex v);

/// Replaces uv by u-w-v where w is the new vertex n.
Graph subdivide_edge(const Graph& g, Vertex u, Vertex v);

/// Vertex x of g becomes vertex new_id[x] of the result.
Graph relabel(const Graph& g, std::span<const Vertex> new_id);

// Convenience constructors used throughout tests and the CLI.
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int n);

// graph6 interchange format. Sizes up to 62 use the single-byte header;
// larger graphs use the "~" + 18-bit form. A leading ">>graph6<<" header is
// accepted on input and never produced.
Graph parse_g6(std::string_view text);
std::string emit_g6(const Graph& g);

}  // namespace zagreb
