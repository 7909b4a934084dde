#include "zagreb/rewrites.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

#include "zagreb/structure.hpp"

namespace zagreb {

namespace {

[[noreturn]] void violated(const std::string& clause) { throw Error(ErrorCode::PreconditionViolated, clause); }

[[noreturn]] void degenerate(const std::string& what) { throw Error(ErrorCode::DegenerateSite, what); }

void require(bool ok, const std::string& clause) {
    if (!ok) violated(clause);
}

void require_vertices(const Graph& g, std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) {
        if (v < 0 || v >= g.order()) {
            throw Error(ErrorCode::VertexOutOfRange, "site vertex " + std::to_string(v));
        }
    }
}

void require_distinct(std::vector<Vertex> vs, const std::string& what) {
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) degenerate(what);
}

BlockDecomposition connected_blocks(const Graph& g) {
    require(g.order() >= 1 && is_connected(g), "graph is connected");
    return decompose(g);
}

bool edge_on_cycle(const Graph& g, const BlockDecomposition& bd, Vertex a, Vertex b) {
    if (!g.has_edge(a, b)) return false;
    const int blk = bd.block_of_edge(a, b);
    return blk >= 0 && bd.blocks[blk].size() >= 3;
}

bool is_pendant(const Graph& g, Vertex x) { return degree(g, x) == 1; }

// Other neighbor of a degree-2 vertex.
Vertex other_neighbor(const Graph& g, Vertex x, Vertex not_this) {
    const auto nbrs = g.neighbors(x);
    if (nbrs.size() != 2) violated("vertex " + std::to_string(x) + " has degree 2 in its cycle endblock");
    return nbrs[0] == not_this ? nbrs[1] : nbrs[0];
}

Graph edit(Graph g, std::initializer_list<Edge> removed, std::initializer_list<Edge> added) {
    for (const auto& [a, b] : removed) g = remove_edge(g, a, b);
    for (const auto& [a, b] : added) g = add_edge(g, a, b);
    return g;
}

RewriteOutcome outcome(const Graph& before, Graph after) {
    if (!is_connected(after)) throw std::logic_error("rewrite disconnected the graph");
    RewriteOutcome out;
    out.delta_m1 = zagreb_m1(before) - zagreb_m1(after);
    out.delta_m2 = zagreb_m2(before) - zagreb_m2(after);
    out.k_before = static_cast<int>(cut_vertices(before).size());
    out.k_after = static_cast<int>(cut_vertices(after).size());
    out.m_before = before.size();
    out.m_after = after.size();
    out.result = std::move(after);
    return out;
}

// Path given as anchor, head, ..., leaf must be exactly the pendant path
// leaving the anchor through head.
bool is_pendant_path(const Graph& g, const std::vector<Vertex>& path) {
    if (path.size() < 2) return false;
    for (Vertex x : path) {
        if (x < 0 || x >= g.order()) return false;
    }
    const auto walked = pendant_path_from(g, path[0], path[1]);
    return !walked.empty() && std::equal(walked.begin(), walked.end(), path.begin() + 1, path.end());
}

std::vector<std::vector<Vertex>> pendant_paths_at(const Graph& g, Vertex u) {
    std::vector<std::vector<Vertex>> out;
    for (Vertex x : g.neighbors(u)) {
        auto p = pendant_path_from(g, u, x);
        if (p.empty()) continue;
        p.insert(p.begin(), u);
        out.push_back(std::move(p));
    }
    return out;
}

// --- validators -----------------------------------------------------------

void validate(const Graph& g, const BlockDecomposition& bd, const OpISite& s) {
    require_vertices(g, {s.v, s.v1, s.u1, s.u2});
    require_distinct({s.v, s.v1, s.u1, s.u2}, "OpI needs v, v1, u1, u2 pairwise distinct");
    require(degree(g, s.v) >= 3, "d(v) >= 3");
    require(g.has_edge(s.v, s.v1) && is_pendant(g, s.v1), "v1 is a pendant neighbor of v");
    require(edge_on_cycle(g, bd, s.u1, s.u2), "u1u2 is an edge on a cycle");
}

void validate(const Graph& g, const BlockDecomposition& bd, const OpIbSite& s) {
    require_vertices(g, {s.v, s.v1, s.w1});
    require(on_cycle(bd, s.v), "v lies on a cycle");
    require(g.has_edge(s.v, s.v1) && is_pendant(g, s.v1), "v1 is a pendant neighbor of v");
    require(s.w1 != s.v && s.w1 != s.v1, "w1 is a second pendant vertex, not v or v1");
    require(is_pendant(g, s.w1), "w1 is a pendant vertex");
}

void validate(const Graph& g, const BlockDecomposition& bd, const OpIISite& s) {
    require_vertices(g, {s.v, s.v2, s.u21, s.tail_end, s.w1, s.w2});
    require(degree(g, s.v) >= 3, "d(v) >= 3");
    for (Vertex x : g.neighbors(s.v)) {
        require(!is_pendant(g, x), "v has no pendant neighbor (otherwise reduce to OpI)");
    }
    const auto moved = pendant_path_from(g, s.v, s.v2);
    require(moved.size() >= 2 && moved[1] == s.u21, "v-v2-u21 starts a pendant path of length >= 2");
    bool second = false;
    for (const auto& p : pendant_paths_at(g, s.v)) {
        if (p[1] != s.v2 && p.size() >= 3 && p.back() == s.tail_end) second = true;
    }
    require(second, "tail_end ends a second pendant path of length >= 2 at v");
    require(edge_on_cycle(g, bd, s.w1, s.w2), "w1w2 is an edge on a cycle");
    require_distinct({s.v, s.w1, s.w2}, "OpII needs v outside the cycle edge w1w2");
}

// Cut vertex of block `from` on the block-cut tree path towards vertex `to`.
Vertex attachment_towards(const BlockDecomposition& bd, int from, Vertex to) {
    const int blocks = bd.block_count();
    const int nodes = blocks + static_cast<int>(bd.cut_vertices.size());
    std::vector<std::vector<int>> adj(nodes);
    for (const auto& [b, c] : bd.block_cut_tree) {
        adj[b].push_back(blocks + c);
        adj[blocks + c].push_back(b);
    }
    const auto target_it = std::lower_bound(bd.cut_vertices.begin(), bd.cut_vertices.end(), to);
    const int target = blocks + static_cast<int>(target_it - bd.cut_vertices.begin());
    std::vector<int> parent(nodes, -1);
    std::queue<int> queue;
    queue.push(from);
    parent[from] = from;
    while (!queue.empty()) {
        const int x = queue.front();
        queue.pop();
        for (int y : adj[x]) {
            if (parent[y] < 0) {
                parent[y] = x;
                queue.push(y);
            }
        }
    }
    int node = target;
    while (parent[node] != from) node = parent[node];
    return bd.cut_vertices[node - blocks];
}

void validate(const Graph& g, const BlockDecomposition& bd, const OpIIISite& s) {
    require_vertices(g, {s.w, s.v1, s.v2, s.v0, s.u1, s.u2});
    require(g.has_edge(s.w, s.v1) && g.has_edge(s.w, s.v2), "v1 and v2 are neighbors of w");
    const int c2 = bd.block_of_edge(s.w, s.v1);
    require(c2 == bd.block_of_edge(s.w, s.v2) && s.v1 != s.v2, "v1, v2 are w's two neighbors in one block C2");
    require(is_cycle_block(g, bd, c2), "C2 is a cycle block");
    const auto c2_cuts = bd.cuts_in_block(c2);
    require(c2_cuts.size() == 1 && c2_cuts[0] == s.w, "C2 is an endblock with cut vertex w");
    require(other_neighbor(g, s.v2, s.w) == s.v0, "v0 is v2's other neighbor on C2");
    require(g.has_edge(s.u1, s.u2), "u1u2 is an edge");
    const int c1 = bd.block_of_edge(s.u1, s.u2);
    require(c1 != c2 && is_cycle_block(g, bd, c1), "u1u2 lies on a cycle block C1 other than C2");
    require(!bd.contains(c1, s.w), "C1 does not contain w (cycles sharing a vertex use OpIV)");
    const Vertex attach = attachment_towards(bd, c1, s.w);
    require(s.u1 != attach && s.u2 != attach, "u1u2 avoids the vertex where C1 attaches towards C2");
}

void validate(const Graph& g, const BlockDecomposition& bd, const OpIVSite& s) {
    require_vertices(g, {s.v, s.v2, s.v1, s.v0});
    require(g.has_edge(s.v, s.v2) && g.has_edge(s.v, s.v1), "v2 and v1 are neighbors of v");
    const int c1 = bd.block_of_edge(s.v, s.v2);
    const int c2 = bd.block_of_edge(s.v, s.v1);
    require(c1 != c2, "v2 and v1 lie in different blocks C1, C2");
    require(is_cycle_block(g, bd, c1) && is_cycle_block(g, bd, c2), "C1 and C2 are cycle blocks");
    const auto c2_cuts = bd.cuts_in_block(c2);
    require(c2_cuts.size() == 1 && c2_cuts[0] == s.v, "C2 is an endblock attached at v");
    require(degree(g, s.v) >= 4, "d(v) >= 4");
    require(other_neighbor(g, s.v1, s.v) == s.v0, "v0 is v1's other neighbor on C2");
    if (g.has_edge(s.v0, s.v2)) degenerate("v0v2 is already an edge");
}

void validate(const Graph& g, const BlockDecomposition& bd, const PathMergeSite& s) {
    require(s.path_u.size() >= 2 && s.path_v.size() >= 2, "both paths have an anchor and at least one vertex");
    const Vertex u = s.path_u[0], v = s.path_v[0];
    require_vertices(g, {u, v});
    require(u != v, "u != v (identified anchors use merge_identified)");
    require(on_cycle(bd, u) && on_cycle(bd, v), "u and v lie on cycles");
    require(degree(g, u) >= 3 && degree(g, v) >= 3, "d(u), d(v) >= 3");
    require(degree(g, u) >= degree(g, v), "d(u) >= d(v)");
    require(is_pendant_path(g, s.path_u), "path_u is a pendant path at u");
    require(is_pendant_path(g, s.path_v), "path_v is a pendant path at v");
}

void validate(const Graph& g, const BlockDecomposition& bd, const MergeIdentifiedSite& s) {
    require(s.path_a.size() >= 2 && s.path_b.size() >= 2, "both paths have an anchor and at least one vertex");
    const Vertex u = s.path_a[0];
    require_vertices(g, {u, s.path_b[0], s.w1, s.w2});
    require(s.path_b[0] == u, "both paths hang off the same vertex u");
    require(on_cycle(bd, u), "u lies on a cycle");
    require(s.path_a[1] != s.path_b[1], "two distinct pendant paths at u");
    require(is_pendant_path(g, s.path_a) && is_pendant_path(g, s.path_b), "path_a and path_b are pendant paths at u");
    require(edge_on_cycle(g, bd, s.w1, s.w2), "w1w2 is an edge on a cycle");
    require_distinct({u, s.w1, s.w2}, "merge_identified needs the cycle edge w1w2 to avoid u");
}

bool two_connected(int n_local, const EdgeList& edges) {
    if (n_local < 3) return false;
    const Graph local = build(n_local, edges);
    return is_connected(local) && cut_vertices(local).empty();
}

void validate(const Graph& g, const BlockDecomposition& bd, const BlockEdgeDeleteSite& s) {
    require_vertices(g, {s.u, s.v});
    if (!g.has_edge(s.u, s.v)) throw Error(ErrorCode::EdgeAbsent, "no edge " + std::to_string(s.u) + "-" + std::to_string(s.v));
    const int b = bd.block_of_edge(s.u, s.v);
    const auto& block = bd.blocks[b];
    require(block.size() >= 4, "block has at least 4 vertices");
    require(!is_cycle_block(g, bd, b), "block is not a cycle");
    auto local_id = [&](Vertex x) {
        return static_cast<Vertex>(std::lower_bound(block.begin(), block.end(), x) - block.begin());
    };
    EdgeList rest;
    const Edge removed{std::min(s.u, s.v), std::max(s.u, s.v)};
    for (const auto& e : bd.block_edges[b]) {
        if (e != removed) rest.push_back({local_id(e.u), local_id(e.v)});
    }
    require(two_connected(static_cast<int>(block.size()), rest), "block minus uv stays 2-connected");
}

// --- transformations ------------------------------------------------------

Graph transform(const Graph& g, const OpISite& s) {
    return edit(g, {{s.u1, s.u2}, {s.v, s.v1}}, {{s.u1, s.v1}, {s.u2, s.v1}});
}

Graph transform(const Graph& g, const OpIbSite& s) { return edit(g, {{s.v, s.v1}}, {{s.v1, s.w1}}); }

Graph transform(const Graph& g, const OpIISite& s) {
    return edit(g, {{s.v, s.v2}, {s.u21, s.v2}, {s.w1, s.w2}}, {{s.v2, s.w1}, {s.v2, s.w2}, {s.u21, s.tail_end}});
}

Graph transform(const Graph& g, const OpIIISite& s) {
    return edit(g, {{s.v1, s.w}, {s.v0, s.v2}, {s.u1, s.u2}}, {{s.u1, s.v0}, {s.u2, s.v1}});
}

Graph transform(const Graph& g, const OpIVSite& s) { return edit(g, {{s.v, s.v2}, {s.v0, s.v1}}, {{s.v0, s.v2}}); }

Graph transform(const Graph& g, const PathMergeSite& s) {
    return edit(g, {{s.path_u[0], s.path_u[1]}}, {{s.path_u[1], s.path_v.back()}});
}

Graph transform(const Graph& g, const MergeIdentifiedSite& s) {
    const Vertex u = s.path_a[0], head = s.path_a[1];
    Graph out = remove_edge(g, u, head);
    if (s.path_a.size() > 2) {
        out = remove_edge(out, head, s.path_a[2]);
        out = add_edge(out, s.path_b.back(), s.path_a[2]);
    }
    return edit(out, {{s.w1, s.w2}}, {{s.w1, head}, {head, s.w2}});
}

Graph transform(const Graph& g, const BlockEdgeDeleteSite& s) { return remove_edge(g, s.u, s.v); }

template <typename Site>
RewriteOutcome run(const Graph& g, const Site& site) {
    const auto bd = connected_blocks(g);
    validate(g, bd, site);
    return outcome(g, transform(g, site));
}

template <typename Site>
bool passes(const Graph& g, const BlockDecomposition& bd, const Site& site) {
    try {
        validate(g, bd, site);
        return true;
    } catch (const Error&) {
        return false;
    }
}

}  // namespace

std::string_view to_string(RewriteKind kind) noexcept {
    switch (kind) {
        case RewriteKind::OpI: return "I";
        case RewriteKind::OpIb: return "Ib";
        case RewriteKind::OpII: return "II";
        case RewriteKind::OpIII: return "III";
        case RewriteKind::OpIV: return "IV";
        case RewriteKind::PathMerge: return "merge";
        case RewriteKind::MergeIdentified: return "merge-id";
        case RewriteKind::BlockEdgeDelete: return "edge-del";
    }
    return "?";
}

RewriteKind kind_of(const RewriteSite& site) noexcept { return static_cast<RewriteKind>(site.index()); }

std::vector<Vertex> site_vertices(const RewriteSite& site) {
    return std::visit(
        [](const auto& s) -> std::vector<Vertex> {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, OpISite>) return {s.v, s.v1, s.u1, s.u2};
            else if constexpr (std::is_same_v<S, OpIbSite>) return {s.v, s.v1, s.w1};
            else if constexpr (std::is_same_v<S, OpIISite>) return {s.v, s.v2, s.u21, s.tail_end, s.w1, s.w2};
            else if constexpr (std::is_same_v<S, OpIIISite>) return {s.w, s.v1, s.v2, s.v0, s.u1, s.u2};
            else if constexpr (std::is_same_v<S, OpIVSite>) return {s.v, s.v2, s.v1, s.v0};
            else if constexpr (std::is_same_v<S, PathMergeSite>) {
                auto out = s.path_u;
                out.insert(out.end(), s.path_v.begin(), s.path_v.end());
                return out;
            } else if constexpr (std::is_same_v<S, MergeIdentifiedSite>) {
                auto out = s.path_a;
                out.insert(out.end(), s.path_b.begin() + 1, s.path_b.end());
                out.push_back(s.w1);
                out.push_back(s.w2);
                return out;
            } else {
                return {s.u, s.v};
            }
        },
        site);
}

int site_arity(RewriteKind kind) noexcept {
    switch (kind) {
        case RewriteKind::OpI: return 4;
        case RewriteKind::OpIb: return 3;
        case RewriteKind::OpII: return 6;
        case RewriteKind::OpIII: return 6;
        case RewriteKind::OpIV: return 4;
        case RewriteKind::PathMerge: return 4;
        case RewriteKind::MergeIdentified: return 5;
        case RewriteKind::BlockEdgeDelete: return 2;
    }
    return 0;
}

RewriteSite site_from_list(const Graph& g, RewriteKind kind, const std::vector<Vertex>& l) {
    if (static_cast<int>(l.size()) != site_arity(kind)) {
        throw Error(ErrorCode::InvalidParameters, std::string("site for ") + std::string(to_string(kind)) +
                                                      " takes " + std::to_string(site_arity(kind)) + " vertices");
    }
    auto full_path = [&](Vertex anchor, Vertex head) {
        require_vertices(g, {anchor, head});
        auto p = pendant_path_from(g, anchor, head);
        if (p.empty()) violated(std::to_string(head) + " heads a pendant path at " + std::to_string(anchor));
        p.insert(p.begin(), anchor);
        return p;
    };
    switch (kind) {
        case RewriteKind::OpI: return OpISite{l[0], l[1], l[2], l[3]};
        case RewriteKind::OpIb: return OpIbSite{l[0], l[1], l[2]};
        case RewriteKind::OpII: return OpIISite{l[0], l[1], l[2], l[3], l[4], l[5]};
        case RewriteKind::OpIII: return OpIIISite{l[0], l[1], l[2], l[3], l[4], l[5]};
        case RewriteKind::OpIV: return OpIVSite{l[0], l[1], l[2], l[3]};
        case RewriteKind::PathMerge: return PathMergeSite{full_path(l[0], l[1]), full_path(l[2], l[3])};
        case RewriteKind::MergeIdentified:
            return MergeIdentifiedSite{full_path(l[0], l[1]), full_path(l[0], l[2]), l[3], l[4]};
        case RewriteKind::BlockEdgeDelete: return BlockEdgeDeleteSite{l[0], l[1]};
    }
    throw Error(ErrorCode::InvalidParameters, "unknown rewrite kind");
}

RewriteOutcome op_i(const Graph& g, const OpISite& site) { return run(g, site); }

RewriteOutcome op_i_b(const Graph& g, Vertex v, Vertex v1, Vertex w1) { return run(g, OpIbSite{v, v1, w1}); }

RewriteOutcome op_ii(const Graph& g, const OpIISite& site) { return run(g, site); }

RewriteOutcome op_iii(const Graph& g, const OpIIISite& site) { return run(g, site); }

RewriteOutcome op_iv(const Graph& g, const OpIVSite& site) { return run(g, site); }

RewriteOutcome path_merge(const Graph& g, Vertex u, Vertex v, const std::vector<Vertex>& path_u,
                          const std::vector<Vertex>& path_v) {
    require(!path_u.empty() && path_u[0] == u && !path_v.empty() && path_v[0] == v,
            "paths start at their anchors u and v");
    return run(g, PathMergeSite{path_u, path_v});
}

RewriteOutcome merge_identified(const Graph& g, Vertex u, const std::vector<Vertex>& path_a,
                                const std::vector<Vertex>& path_b, Vertex w1, Vertex w2) {
    require(!path_a.empty() && path_a[0] == u && !path_b.empty() && path_b[0] == u, "both paths start at u");
    return run(g, MergeIdentifiedSite{path_a, path_b, w1, w2});
}

RewriteOutcome merge_identified(const Graph& g, Vertex u, const std::vector<Vertex>& path_a,
                                const std::vector<Vertex>& path_b) {
    const auto bd = connected_blocks(g);
    for (const auto& e : g.edges()) {
        if (e.u != u && e.v != u && edge_on_cycle(g, bd, e.u, e.v)) return merge_identified(g, u, path_a, path_b, e.u, e.v);
    }
    violated("a cycle edge avoiding u exists");
}

RewriteOutcome block_edge_delete(const Graph& g, Vertex u, Vertex v) { return run(g, BlockEdgeDeleteSite{u, v}); }

RewriteOutcome apply(const Graph& g, const RewriteSite& site) {
    return std::visit([&](const auto& s) { return run(g, s); }, site);
}

std::vector<RewriteSite> find_sites(const Graph& g, std::optional<RewriteKind> kind) {
    std::vector<RewriteSite> out;
    if (g.order() < 3 || !is_connected(g) || g.size() < g.order()) return out;
    const auto bd = decompose(g);
    const int n = g.order();
    auto wanted = [&](RewriteKind k) { return !kind || *kind == k; };

    EdgeList cycle_edges;
    for (const auto& e : g.edges()) {
        if (edge_on_cycle(g, bd, e.u, e.v)) cycle_edges.push_back(e);
    }
    std::vector<Vertex> pendants;
    for (Vertex x = 0; x < n; ++x) {
        if (is_pendant(g, x)) pendants.push_back(x);
    }
    std::vector<std::vector<std::vector<Vertex>>> paths(n);
    for (Vertex x = 0; x < n; ++x) paths[x] = pendant_paths_at(g, x);

    auto emit = [&](auto site) {
        if (passes(g, bd, site)) out.emplace_back(std::move(site));
    };

    if (wanted(RewriteKind::OpI)) {
        for (Vertex v = 0; v < n; ++v) {
            if (degree(g, v) < 3 || on_cycle(bd, v)) continue;
            for (Vertex v1 : g.neighbors(v)) {
                if (!is_pendant(g, v1)) continue;
                for (const auto& e : cycle_edges) {
                    if (e.u != v && e.v != v) emit(OpISite{v, v1, e.u, e.v});
                }
            }
        }
    }
    if (wanted(RewriteKind::OpIb)) {
        for (Vertex v = 0; v < n; ++v) {
            if (!on_cycle(bd, v)) continue;
            for (Vertex v1 : g.neighbors(v)) {
                if (!is_pendant(g, v1)) continue;
                for (Vertex w1 : pendants) {
                    if (w1 != v1) emit(OpIbSite{v, v1, w1});
                }
            }
        }
    }
    if (wanted(RewriteKind::OpII)) {
        for (Vertex v = 0; v < n; ++v) {
            if (degree(g, v) < 3) continue;
            for (const auto& moved : paths[v]) {
                for (const auto& kept : paths[v]) {
                    if (moved[1] == kept[1] || moved.size() < 3 || kept.size() < 3) continue;
                    for (const auto& e : cycle_edges) {
                        if (e.u != v && e.v != v) emit(OpIISite{v, moved[1], moved[2], kept.back(), e.u, e.v});
                    }
                }
            }
        }
    }
    if (wanted(RewriteKind::OpIII)) {
        for (int c2 = 0; c2 < bd.block_count(); ++c2) {
            if (!is_cycle_block(g, bd, c2)) continue;
            const auto cuts = bd.cuts_in_block(c2);
            if (cuts.size() != 1) continue;
            const Vertex w = cuts[0];
            std::vector<Vertex> ring;
            for (Vertex x : g.neighbors(w)) {
                if (bd.contains(c2, x)) ring.push_back(x);
            }
            for (int c1 = 0; c1 < bd.block_count(); ++c1) {
                if (c1 == c2 || !is_cycle_block(g, bd, c1) || bd.contains(c1, w)) continue;
                for (int which = 0; which < 2; ++which) {
                    const Vertex v1 = ring[which], v2 = ring[1 - which];
                    const Vertex v0 = other_neighbor(g, v2, w);
                    for (const auto& e : bd.block_edges[c1]) {
                        emit(OpIIISite{w, v1, v2, v0, e.u, e.v});
                        if (v0 != v1) emit(OpIIISite{w, v1, v2, v0, e.v, e.u});
                    }
                }
            }
        }
    }
    if (wanted(RewriteKind::OpIV)) {
        for (Vertex v = 0; v < n; ++v) {
            if (!bd.is_cut_vertex(v)) continue;
            for (Vertex v2 : g.neighbors(v)) {
                for (Vertex v1 : g.neighbors(v)) {
                    if (v1 == v2 || degree(g, v1) != 2) continue;
                    if (bd.block_of_edge(v, v1) == bd.block_of_edge(v, v2)) continue;
                    emit(OpIVSite{v, v2, v1, other_neighbor(g, v1, v)});
                }
            }
        }
    }
    if (wanted(RewriteKind::PathMerge)) {
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = 0; v < n; ++v) {
                if (u == v) continue;
                for (const auto& pu : paths[u]) {
                    for (const auto& pv : paths[v]) emit(PathMergeSite{pu, pv});
                }
            }
        }
    }
    if (wanted(RewriteKind::MergeIdentified)) {
        for (Vertex u = 0; u < n; ++u) {
            for (const auto& pa : paths[u]) {
                for (const auto& pb : paths[u]) {
                    if (pa[1] == pb[1]) continue;
                    for (const auto& e : cycle_edges) {
                        if (e.u != u && e.v != u) emit(MergeIdentifiedSite{pa, pb, e.u, e.v});
                    }
                }
            }
        }
    }
    if (wanted(RewriteKind::BlockEdgeDelete)) {
        for (int b = 0; b < bd.block_count(); ++b) {
            if (bd.blocks[b].size() < 4 || is_cycle_block(g, bd, b)) continue;
            for (const auto& e : bd.block_edges[b]) emit(BlockEdgeDeleteSite{e.u, e.v});
        }
    }

    std::stable_sort(out.begin(), out.end(), [](const RewriteSite& a, const RewriteSite& b) {
        if (a.index() != b.index()) return a.index() < b.index();
        return site_vertices(a) < site_vertices(b);
    });
    return out;
}

}  // namespace zagreb
