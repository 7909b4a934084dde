#pragma once

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "zagreb/graph.hpp"
#include "zagreb/indices.hpp"

namespace zagreb {

// Index-decreasing rewrites. Each operation validates its site, throws
// PreconditionViolated (naming the failed clause) or DegenerateSite when it
// does not apply, and otherwise returns the rewritten graph with its index
// deltas. Vertex ids are never compacted, so before/after degrees compare
// directly.

enum class RewriteKind { OpI, OpIb, OpII, OpIII, OpIV, PathMerge, MergeIdentified, BlockEdgeDelete };

std::string_view to_string(RewriteKind kind) noexcept;

/// Pendant vertex v1 of an off-cycle vertex v moves into the cycle edge u1u2.
struct OpISite {
    Vertex v, v1, u1, u2;
};

/// Pendant v1 of the cycle vertex v is re-hung on another pendant vertex w1.
struct OpIbSite {
    Vertex v, v1, w1;
};

/// v2 (head of the pendant path v-v2-u21-...) moves into the cycle edge
/// w1w2; the rest of that path is appended after tail_end, the leaf of a
/// second pendant path at v.
struct OpIISite {
    Vertex v, v2, u21, tail_end, w1, w2;
};

/// Cycle endblock C2 at cut vertex w (neighbors v1, v2; v0 the other
/// neighbor of v2) is spliced into the edge u1u2 of another cycle block,
/// leaving v2 pendant at w.
struct OpIIISite {
    Vertex w, v1, v2, v0, u1, u2;
};

/// Cycle endblock C2 sharing v with cycle block C1: v2 on C1, v1 on C2, v0 the
/// other C2-neighbor of v1. The two cycles merge through v, v1 stays pendant.
struct OpIVSite {
    Vertex v, v2, v1, v0;
};

/// path_u = u, u1, ..., and path_v = v, v1, ..., pendant paths at distinct
/// cycle vertices. u's path is moved onto the end of v's.
struct PathMergeSite {
    std::vector<Vertex> path_u;
    std::vector<Vertex> path_v;
};

/// Two pendant paths at the same cycle vertex u (both lists start at u). The
/// head of path_a subdivides the cycle edge w1w2, its remainder is appended
/// to the end of path_b.
struct MergeIdentifiedSite {
    std::vector<Vertex> path_a;
    std::vector<Vertex> path_b;
    Vertex w1, w2;
};

/// Edge of a non-cycle 2-connected block whose removal keeps it 2-connected.
struct BlockEdgeDeleteSite {
    Vertex u, v;
};

using RewriteSite = std::variant<OpISite, OpIbSite, OpIISite, OpIIISite, OpIVSite, PathMergeSite,
                                 MergeIdentifiedSite, BlockEdgeDeleteSite>;

RewriteKind kind_of(const RewriteSite& site) noexcept;

/// Flat vertex tuple of a site: the named vertices in declaration order;
/// path sites list the full paths. Used for ordering and display.
std::vector<Vertex> site_vertices(const RewriteSite& site);

/// Short positional form used on the command line:
///   I: v,v1,u1,u2    Ib: v,v1,w1    II: v,v2,u21,tail_end,w1,w2
///   III: w,v1,v2,v0,u1,u2    IV: v,v2,v1,v0    edge-del: u,v
///   merge: u,u1,v,v1 (paths are followed out from the given heads)
///   merge-id: u,a1,b1,w1,w2
int site_arity(RewriteKind kind) noexcept;
RewriteSite site_from_list(const Graph& g, RewriteKind kind, const std::vector<Vertex>& list);

struct RewriteOutcome {
    Graph result;
    Index delta_m1 = 0;
    Index delta_m2 = 0;
    int k_before = 0;
    int k_after = 0;
    int m_before = 0;
    int m_after = 0;
};

RewriteOutcome op_i(const Graph& g, const OpISite& site);
RewriteOutcome op_i_b(const Graph& g, Vertex v, Vertex v1, Vertex w1);
RewriteOutcome op_ii(const Graph& g, const OpIISite& site);
RewriteOutcome op_iii(const Graph& g, const OpIIISite& site);
RewriteOutcome op_iv(const Graph& g, const OpIVSite& site);
RewriteOutcome path_merge(const Graph& g, Vertex u, Vertex v, const std::vector<Vertex>& path_u,
                          const std::vector<Vertex>& path_v);
RewriteOutcome merge_identified(const Graph& g, Vertex u, const std::vector<Vertex>& path_a,
                                const std::vector<Vertex>& path_b, Vertex w1, Vertex w2);
/// Picks the lexicographically first cycle edge avoiding u.
RewriteOutcome merge_identified(const Graph& g, Vertex u, const std::vector<Vertex>& path_a,
                                const std::vector<Vertex>& path_b);
RewriteOutcome block_edge_delete(const Graph& g, Vertex u, Vertex v);

/// Dispatches on the site's kind.
RewriteOutcome apply(const Graph& g, const RewriteSite& site);

/// Every site of the requested kind (all kinds when empty) that passes its
/// validator, ordered by kind then by vertex tuple. Mirror-image sites that
/// give identical results are reported once. OpI sites are reported only for
/// off-cycle v: the on-cycle case belongs to OpIb.
std::vector<RewriteSite> find_sites(const Graph& g, std::optional<RewriteKind> kind = std::nullopt);

}  // namespace zagreb
