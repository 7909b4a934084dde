#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zagreb/graph.hpp"
#include "zagreb/indices.hpp"
#include "zagreb/rewrites.hpp"

namespace zagreb {

enum class TerminationReason { ReachedCnk, NoKPreservingSite, NoSite };

std::string_view to_string(TerminationReason reason) noexcept;

struct MinimizePolicy {
    bool preserve_k = true;
};

struct MinimizeStep {
    RewriteKind kind;
    std::vector<Vertex> site;
    Index delta_m1;
    Index delta_m2;
    int k_after;
};

struct MinimizeTrace {
    Graph initial;
    Graph final_graph;
    std::vector<MinimizeStep> steps;
    TerminationReason reason = TerminationReason::NoSite;
};

/// Greedy index descent mirroring the extremal argument. Each round applies
/// the first applicable site in phase order:
///   1. delete edges of non-cycle 2-connected blocks,
///   2. OpI / OpIb / OpII to straighten the pendant forest into paths,
///   3. path merges down to a single pendant path,
///   4. OpIII / OpIV down to a single cycle.
/// With preserve_k a site is applied only if the cut-vertex count is
/// unchanged afterwards. Stops as soon as the graph is a C_{n,k}.
///
/// Throws InvalidInput unless g is connected, has a cycle and a cut vertex.
MinimizeTrace minimize(const Graph& g, const MinimizePolicy& policy = {});

/// Exhaustive minima of M1 and M2 over the class of connected n-vertex graphs
/// with k cut vertices and a cycle, against the claimed closed forms.
struct ExtremalReport {
    int n = 0;
    int k = 0;
    std::optional<Index> min_m1;
    std::optional<Index> min_m2;
    std::vector<std::string> argmin_m1;  // canonical graph6 keys, sorted
    std::vector<std::string> argmin_m2;
    std::uint64_t class_size = 0;
    bool m1_matches_paper = false;
    bool m2_matches_paper = false;
    bool unique_extremal_is_cnk = false;  // both argmin sets are exactly {C_{n,k}}

    bool agrees_with_claims() const noexcept {
        return m1_matches_paper && m2_matches_paper && unique_extremal_is_cnk;
    }
};

struct VerifyOptions {
    int threads = 1;
    int max_vertices = 9;
};

/// Requires 4 <= n and 1 <= k <= n-3; SizeLimitExceeded above max_vertices.
ExtremalReport verify_theorem(int n, int k, const VerifyOptions& options = {});

/// Reports for every k in [1, n-3] from a single enumeration pass.
std::vector<ExtremalReport> verify_order(int n, const VerifyOptions& options = {});

/// Reports for 4 <= n <= n_max, ordered by (n, k).
std::vector<ExtremalReport> verify_range(int n_max, const VerifyOptions& options = {});

// Serialization. JSON carries exactly the report fields; CSV columns are
// n,k,class_size,min_m1,min_m2,m1_ok,m2_ok,unique_cnk.
std::string reports_to_json(const std::vector<ExtremalReport>& reports);
std::string reports_to_csv(const std::vector<ExtremalReport>& reports);
std::string reports_to_text(const std::vector<ExtremalReport>& reports);

}  // namespace zagreb
