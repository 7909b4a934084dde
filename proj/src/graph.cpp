#include "zagreb/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace zagreb {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorCode::SelfLoop: return "SelfLoop";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::EdgeAbsent: return "EdgeAbsent";
        case ErrorCode::EmptyGraph: return "EmptyGraph";
        case ErrorCode::MalformedEncoding: return "MalformedEncoding";
        case ErrorCode::UnsupportedSize: return "UnsupportedSize";
        case ErrorCode::DomainTooSmall: return "DomainTooSmall";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::Acyclic: return "Acyclic";
        case ErrorCode::InvalidParameters: return "InvalidParameters";
        case ErrorCode::NotABlock: return "NotABlock";
        case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::DegenerateSite: return "DegenerateSite";
        case ErrorCode::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

Graph::Graph(std::vector<std::vector<Vertex>> adjacency) : adjacency_(std::move(adjacency)) {
    std::size_t total = 0;
    for (auto& row : adjacency_) {
        std::sort(row.begin(), row.end());
        total += row.size();
    }
    edge_count_ = static_cast<int>(total / 2);
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= order()) {
        throw Error(ErrorCode::VertexOutOfRange,
                    "vertex " + std::to_string(v) + " not in [0, " + std::to_string(order()) + ")");
    }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return adjacency_[v];
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& row = adjacency_[u];
    return std::binary_search(row.begin(), row.end(), v);
}

EdgeList Graph::edges() const {
    EdgeList out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u) {
        for (Vertex v : adjacency_[u]) {
            if (u < v) out.push_back({u, v});
        }
    }
    return out;
}

Graph build(int n, const EdgeList& edges) {
    if (n < 1) throw Error(ErrorCode::EmptyGraph, "graph must have at least one vertex");
    std::vector<std::vector<Vertex>> adj(n);
    auto in_range = [n](Vertex x) { return x >= 0 && x < n; };
    for (const auto& [u, v] : edges) {
        if (!in_range(u) || !in_range(v)) {
            throw Error(ErrorCode::VertexOutOfRange,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
        }
        if (u == v) throw Error(ErrorCode::SelfLoop, "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (Vertex u = 0; u < n; ++u) {
        auto& row = adj[u];
        std::sort(row.begin(), row.end());
        if (auto it = std::adjacent_find(row.begin(), row.end()); it != row.end()) {
            throw Error(ErrorCode::DuplicateEdge, "edge (" + std::to_string(u) + "," + std::to_string(*it) + ")");
        }
    }
    return Graph(std::move(adj));
}

int degree(const Graph& g, Vertex v) {
    g.check_vertex(v);
    return static_cast<int>(g.adjacency_[v].size());
}

bool is_connected(const Graph& g) {
    const int n = g.order();
    if (n == 0) throw Error(ErrorCode::EmptyGraph, "connectivity of the empty graph");
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : g.neighbors(x)) {
            if (!seen[y]) {
                seen[y] = 1;
                ++reached;
                stack.push_back(y);
            }
        }
    }
    return reached == n;
}

Graph remove_edge(const Graph& g, Vertex u, Vertex v) {
    if (!g.has_edge(u, v)) {
        throw Error(ErrorCode::EdgeAbsent, "no edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    auto adj = g.adjacency_;
    std::erase(adj[u], v);
    std::erase(adj[v], u);
    return Graph(std::move(adj));
}

Graph add_edge(const Graph& g, Vertex u, Vertex v) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(u));
    if (g.has_edge(u, v)) {
        throw Error(ErrorCode::DuplicateEdge, "edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    auto adj = g.adjacency_;
    adj[u].push_back(v);
    adj[v].push_back(u);
    return Graph(std::move(adj));
}

Graph subdivide_edge(const Graph& g, Vertex u, Vertex v) {
    if (!g.has_edge(u, v)) {
        throw Error(ErrorCode::EdgeAbsent, "no edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    auto adj = g.adjacency_;
    const auto w = static_cast<Vertex>(adj.size());
    std::replace(adj[u].begin(), adj[u].end(), v, w);
    std::replace(adj[v].begin(), adj[v].end(), u, w);
    adj.push_back({u, v});
    return Graph(std::move(adj));
}

Graph relabel(const Graph& g, std::span<const Vertex> new_id) {
    const int n = g.order();
    if (static_cast<int>(new_id.size()) != n) {
        throw Error(ErrorCode::InvalidParameters, "relabeling has wrong length");
    }
    std::vector<char> used(n, 0);
    for (Vertex x : new_id) {
        if (x < 0 || x >= n || used[x]) throw Error(ErrorCode::InvalidParameters, "relabeling is not a permutation");
        used[x] = 1;
    }
    std::vector<std::vector<Vertex>> adj(n);
    for (Vertex x = 0; x < n; ++x) {
        for (Vertex y : g.adjacency_[x]) adj[new_id[x]].push_back(new_id[y]);
    }
    return Graph(std::move(adj));
}

Graph cycle_graph(int n) {
    if (n < 3) throw Error(ErrorCode::InvalidParameters, "cycle needs at least 3 vertices");
    EdgeList edges;
    for (Vertex i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return build(n, edges);
}

Graph path_graph(int n) {
    EdgeList edges;
    for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return build(n, edges);
}

Graph complete_graph(int n) {
    EdgeList edges;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
    return build(n, edges);
}

Graph star_graph(int n) {
    EdgeList edges;
    for (Vertex i = 1; i < n; ++i) edges.push_back({0, i});
    return build(n, edges);
}

}  // namespace zagreb
