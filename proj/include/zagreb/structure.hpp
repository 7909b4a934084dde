#pragma once

#include <utility>
#include <vector>

#include "zagreb/graph.hpp"

namespace zagreb {

/// Blocks (maximal 2-connected subgraphs or bridges) and cut vertices of a
/// connected graph.
///
/// Blocks are stored with sorted vertex lists and ordered lexicographically,
/// so the decomposition of a given labeled graph is deterministic.
/// Node i < blocks.size() of the block-cut tree is block i; node
/// blocks.size() + j is cut_vertices[j].
struct BlockDecomposition {
    std::vector<Vertex> cut_vertices;
    std::vector<std::vector<Vertex>> blocks;
    std::vector<EdgeList> block_edges;
    std::vector<bool> endblock;
    std::vector<std::pair<int, int>> block_cut_tree;  // (block index, cut-vertex index)

    int block_count() const noexcept { return static_cast<int>(blocks.size()); }
    bool is_cut_vertex(Vertex v) const;
    bool contains(int block, Vertex v) const;
    std::vector<int> blocks_containing(Vertex v) const;
    /// Index of the block holding edge uv, or -1.
    int block_of_edge(Vertex u, Vertex v) const;
    std::vector<Vertex> cuts_in_block(int block) const;
};

std::vector<Vertex> cut_vertices(const Graph& g);
BlockDecomposition decompose(const Graph& g);

/// Throws NotABlock when the vertex set is not one of g's blocks.
bool is_cycle_block(const Graph& g, const std::vector<Vertex>& block);
bool is_cycle_block(const Graph& g, const BlockDecomposition& bd, int block);

/// True when v lies on some cycle, i.e. in a block with three or more vertices.
bool on_cycle(const BlockDecomposition& bd, Vertex v);

/// m - n + 1 for a connected graph.
int cyclomatic_number(const Graph& g);

struct PendantTree {
    Vertex anchor;
    std::vector<Vertex> vertices;  // sorted, anchor excluded
    bool is_path;
};

struct PendantPath {
    Vertex anchor;
    std::vector<Vertex> path;  // from the anchor's neighbor out to the leaf

    int length() const noexcept { return static_cast<int>(path.size()); }
};

/// Trees hanging off the 2-core. Each connected component of the stripped
/// vertices is one pendant tree, attached to the core at its anchor.
struct PendantStructure {
    std::vector<Vertex> core;
    std::vector<PendantTree> pendant_trees;
    std::vector<PendantPath> pendant_paths;
};

/// Throws Disconnected, or Acyclic when g is a forest.
PendantStructure pendant_structure(const Graph& g);

/// Walks from anchor through first along degree-2 vertices. Returns the
/// vertex sequence first..leaf when it ends in a degree-1 vertex, or an empty
/// vector when the walk is not a pendant path.
std::vector<Vertex> pendant_path_from(const Graph& g, Vertex anchor, Vertex first);

/// Cycle on n-k vertices (0..n-k-1) with a k-vertex path hanging off vertex 0.
/// Requires n >= 4 and 1 <= k <= n-3.
Graph construct_cnk(int n, int k);

bool is_cnk(const Graph& g);

/// Connected, n vertices, exactly k cut vertices and at least one cycle.
bool in_vnk(const Graph& g, int n, int k);

}  // namespace zagreb
