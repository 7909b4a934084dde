#include "zagreb/structure.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "zagreb/canon.hpp"

namespace zagreb {

namespace {

void require_connected(const Graph& g) {
    if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "graph is not connected");
}

// Hopcroft-Tarjan biconnected components, iterative so long paths cannot
// exhaust the call stack.
struct BiconnectedSearch {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<char> is_cut;
    std::vector<EdgeList> components;

    explicit BiconnectedSearch(const Graph& graph)
        : g(graph), disc(graph.order(), -1), low(graph.order(), 0), is_cut(graph.order(), 0) {}

    void run() {
        struct Frame {
            Vertex v;
            Vertex parent;
            std::size_t next;
        };
        int time = 0;
        EdgeList edge_stack;
        std::vector<Frame> stack;
        const Vertex root = 0;
        disc[root] = low[root] = time++;
        stack.push_back({root, -1, 0});
        int root_children = 0;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto nbrs = g.neighbors(f.v);
            if (f.next < nbrs.size()) {
                const Vertex w = nbrs[f.next++];
                if (disc[w] < 0) {
                    edge_stack.push_back({f.v, w});
                    disc[w] = low[w] = time++;
                    if (f.v == root) ++root_children;
                    stack.push_back({w, f.v, 0});
                } else if (w != f.parent && disc[w] < disc[f.v]) {
                    edge_stack.push_back({f.v, w});
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
                continue;
            }
            const Frame done = f;
            stack.pop_back();
            if (stack.empty()) break;
            const Vertex v = stack.back().v;
            low[v] = std::min(low[v], low[done.v]);
            if (low[done.v] >= disc[v]) {
                if (v != root) is_cut[v] = 1;
                EdgeList block;
                while (true) {
                    const Edge e = edge_stack.back();
                    edge_stack.pop_back();
                    block.push_back(e);
                    if (e.u == v && e.v == done.v) break;
                }
                components.push_back(std::move(block));
            }
        }
        if (root_children >= 2) is_cut[root] = 1;
    }
};

}  // namespace

bool BlockDecomposition::is_cut_vertex(Vertex v) const {
    return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
}

bool BlockDecomposition::contains(int block, Vertex v) const {
    const auto& b = blocks.at(block);
    return std::binary_search(b.begin(), b.end(), v);
}

std::vector<int> BlockDecomposition::blocks_containing(Vertex v) const {
    std::vector<int> out;
    for (int b = 0; b < block_count(); ++b) {
        if (contains(b, v)) out.push_back(b);
    }
    return out;
}

int BlockDecomposition::block_of_edge(Vertex u, Vertex v) const {
    const Edge e{std::min(u, v), std::max(u, v)};
    for (int b = 0; b < block_count(); ++b) {
        if (std::binary_search(block_edges[b].begin(), block_edges[b].end(), e)) return b;
    }
    return -1;
}

std::vector<Vertex> BlockDecomposition::cuts_in_block(int block) const {
    std::vector<Vertex> out;
    for (Vertex v : blocks.at(block)) {
        if (is_cut_vertex(v)) out.push_back(v);
    }
    return out;
}

std::vector<Vertex> cut_vertices(const Graph& g) {
    require_connected(g);
    BiconnectedSearch search(g);
    search.run();
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (search.is_cut[v]) out.push_back(v);
    }
    return out;
}

BlockDecomposition decompose(const Graph& g) {
    require_connected(g);
    BiconnectedSearch search(g);
    search.run();

    struct Block {
        std::vector<Vertex> vertices;
        EdgeList edges;
    };
    std::vector<Block> found;
    for (auto& comp : search.components) {
        Block b;
        for (auto& e : comp) {
            if (e.u > e.v) std::swap(e.u, e.v);
            b.vertices.push_back(e.u);
            b.vertices.push_back(e.v);
        }
        std::sort(b.vertices.begin(), b.vertices.end());
        b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
        std::sort(comp.begin(), comp.end());
        b.edges = std::move(comp);
        found.push_back(std::move(b));
    }
    if (g.order() == 1) found.push_back({{0}, {}});
    std::sort(found.begin(), found.end(), [](const Block& a, const Block& b) { return a.vertices < b.vertices; });

    BlockDecomposition bd;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (search.is_cut[v]) bd.cut_vertices.push_back(v);
    }
    for (auto& b : found) {
        bd.blocks.push_back(std::move(b.vertices));
        bd.block_edges.push_back(std::move(b.edges));
    }
    for (int b = 0; b < bd.block_count(); ++b) {
        const auto cuts = bd.cuts_in_block(b);
        bd.endblock.push_back(cuts.size() <= 1);
        for (Vertex c : cuts) {
            const auto idx = std::lower_bound(bd.cut_vertices.begin(), bd.cut_vertices.end(), c) -
                             bd.cut_vertices.begin();
            bd.block_cut_tree.emplace_back(b, static_cast<int>(idx));
        }
    }
    return bd;
}

bool is_cycle_block(const Graph& g, const BlockDecomposition& bd, int block) {
    const auto& vertices = bd.blocks.at(block);
    if (vertices.size() < 3) return false;
    // A 2-connected block is a cycle exactly when it has as many edges as vertices.
    (void)g;
    return bd.block_edges[block].size() == vertices.size();
}

bool is_cycle_block(const Graph& g, const std::vector<Vertex>& block) {
    auto sorted = block;
    std::sort(sorted.begin(), sorted.end());
    const auto bd = decompose(g);
    const auto it = std::find(bd.blocks.begin(), bd.blocks.end(), sorted);
    if (it == bd.blocks.end()) throw Error(ErrorCode::NotABlock, "vertex set is not a block of the graph");
    return is_cycle_block(g, bd, static_cast<int>(it - bd.blocks.begin()));
}

bool on_cycle(const BlockDecomposition& bd, Vertex v) {
    for (int b = 0; b < bd.block_count(); ++b) {
        if (bd.blocks[b].size() >= 3 && bd.contains(b, v)) return true;
    }
    return false;
}

int cyclomatic_number(const Graph& g) { return g.size() - g.order() + 1; }

std::vector<Vertex> pendant_path_from(const Graph& g, Vertex anchor, Vertex first) {
    if (!g.has_edge(anchor, first)) return {};
    std::vector<Vertex> path{first};
    Vertex prev = anchor, cur = first;
    while (degree(g, cur) == 2) {
        const auto nbrs = g.neighbors(cur);
        const Vertex next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
        if (next == anchor) return {};  // closed back into a cycle
        prev = cur;
        cur = next;
        path.push_back(cur);
    }
    if (degree(g, cur) != 1) return {};
    return path;
}

PendantStructure pendant_structure(const Graph& g) {
    require_connected(g);
    const int n = g.order();
    std::vector<int> deg(n);
    std::vector<char> stripped(n, 0);
    std::vector<Vertex> queue;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = degree(g, v);
        if (deg[v] <= 1) queue.push_back(v);
    }
    while (!queue.empty()) {
        const Vertex v = queue.back();
        queue.pop_back();
        if (stripped[v]) continue;
        stripped[v] = 1;
        for (Vertex w : g.neighbors(v)) {
            if (!stripped[w] && --deg[w] <= 1) queue.push_back(w);
        }
    }

    PendantStructure ps;
    for (Vertex v = 0; v < n; ++v) {
        if (!stripped[v]) ps.core.push_back(v);
    }
    if (ps.core.empty()) throw Error(ErrorCode::Acyclic, "graph has no cycle, so no 2-core");

    // Each stripped component touches the core through exactly one edge.
    std::vector<char> visited(n, 0);
    for (Vertex anchor : ps.core) {
        for (Vertex first : g.neighbors(anchor)) {
            if (!stripped[first] || visited[first]) continue;
            PendantTree tree{anchor, {}, true};
            std::vector<Vertex> stack{first};
            visited[first] = 1;
            while (!stack.empty()) {
                const Vertex x = stack.back();
                stack.pop_back();
                tree.vertices.push_back(x);
                if (degree(g, x) > 2) tree.is_path = false;
                for (Vertex y : g.neighbors(x)) {
                    if (stripped[y] && !visited[y]) {
                        visited[y] = 1;
                        stack.push_back(y);
                    }
                }
            }
            std::sort(tree.vertices.begin(), tree.vertices.end());
            if (tree.is_path) ps.pendant_paths.push_back({anchor, pendant_path_from(g, anchor, first)});
            ps.pendant_trees.push_back(std::move(tree));
        }
    }
    return ps;
}

Graph construct_cnk(int n, int k) {
    if (n < 4 || k < 1 || k > n - 3) {
        throw Error(ErrorCode::InvalidParameters, "C_{n,k} needs n >= 4 and 1 <= k <= n-3, got n=" +
                                                      std::to_string(n) + ", k=" + std::to_string(k));
    }
    const int cycle = n - k;
    EdgeList edges;
    for (Vertex i = 0; i < cycle; ++i) edges.push_back({i, (i + 1) % cycle});
    edges.push_back({0, cycle});
    for (Vertex i = cycle; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return build(n, edges);
}

bool is_cnk(const Graph& g) {
    const int n = g.order();
    if (n < 4 || g.size() != n || !is_connected(g)) return false;
    int ones = 0, threes = 0;
    for (Vertex v = 0; v < n; ++v) {
        const int d = degree(g, v);
        if (d == 1) ++ones;
        else if (d == 3) ++threes;
        else if (d != 2) return false;
    }
    if (ones != 1 || threes != 1) return false;
    const int k = static_cast<int>(cut_vertices(g).size());
    if (k < 1 || k > n - 3) return false;
    if (n > 64) return true;  // the degree sequence above already pins down the tadpole
    const CanonOptions wide{64};
    return canonical_form(g, wide) == canonical_form(construct_cnk(n, k), wide);
}

bool in_vnk(const Graph& g, int n, int k) {
    if (g.order() != n || n < 1 || !is_connected(g)) return false;
    if (g.size() < g.order()) return false;
    return static_cast<int>(cut_vertices(g).size()) == k;
}

}  // namespace zagreb
