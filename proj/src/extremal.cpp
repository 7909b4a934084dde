#include "zagreb/extremal.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "zagreb/canon.hpp"
#include "zagreb/structure.hpp"

namespace zagreb {

std::string_view to_string(TerminationReason reason) noexcept {
    switch (reason) {
        case TerminationReason::ReachedCnk: return "ReachedCnk";
        case TerminationReason::NoKPreservingSite: return "NoKPreservingSite";
        case TerminationReason::NoSite: return "NoSite";
    }
    return "?";
}

namespace {

const std::vector<std::vector<RewriteKind>> kPhases{
    {RewriteKind::BlockEdgeDelete},
    {RewriteKind::OpI, RewriteKind::OpIb, RewriteKind::OpII},
    {RewriteKind::PathMerge, RewriteKind::MergeIdentified},
    {RewriteKind::OpIII, RewriteKind::OpIV},
};

}  // namespace

MinimizeTrace minimize(const Graph& g, const MinimizePolicy& policy) {
    if (g.order() < 4 || !is_connected(g) || g.size() < g.order()) {
        throw Error(ErrorCode::InvalidInput, "minimize needs a connected graph with a cycle and a cut vertex");
    }
    const int k0 = static_cast<int>(cut_vertices(g).size());
    if (k0 < 1) throw Error(ErrorCode::InvalidInput, "minimize needs at least one cut vertex");

    MinimizeTrace trace;
    trace.initial = g;
    Graph current = g;
    // Every rewrite lowers M1 by at least one, which bounds the number of rounds.
    const Index budget = zagreb_m1(g);
    while (true) {
        if (is_cnk(current)) {
            trace.reason = TerminationReason::ReachedCnk;
            break;
        }
        const auto sites = find_sites(current);
        bool any_site = false;
        bool applied = false;
        for (const auto& phase : kPhases) {
            for (const RewriteKind kind : phase) {
                if (applied) break;
                for (const auto& site : sites) {
                    if (kind_of(site) != kind) continue;
                    any_site = true;
                    auto step = zagreb::apply(current, site);
                    if (policy.preserve_k && step.k_after != k0) continue;
                    trace.steps.push_back({kind_of(site), site_vertices(site), step.delta_m1, step.delta_m2, step.k_after});
                    current = std::move(step.result);
                    applied = true;
                    break;
                }
            }
            if (applied) break;
        }
        if (!applied) {
            trace.reason = any_site ? TerminationReason::NoKPreservingSite : TerminationReason::NoSite;
            break;
        }
        if (static_cast<Index>(trace.steps.size()) > budget) throw std::logic_error("minimize failed to terminate");
    }
    trace.final_graph = std::move(current);
    return trace;
}

namespace {

struct Bucket {
    std::uint64_t count = 0;
    std::optional<Index> min_m1, min_m2;
    std::vector<std::string> argmin_m1, argmin_m2;

    void offer(Index m1, Index m2, const std::string& key) {
        ++count;
        update(min_m1, argmin_m1, m1, key);
        update(min_m2, argmin_m2, m2, key);
    }

    static void update(std::optional<Index>& best, std::vector<std::string>& arg, Index value, const std::string& key) {
        if (!best || value < *best) {
            best = value;
            arg.assign(1, key);
        } else if (value == *best) {
            arg.push_back(key);
        }
    }
};

void check_verify_size(int n, const VerifyOptions& options) {
    if (n > options.max_vertices) {
        throw Error(ErrorCode::SizeLimitExceeded, "verification limited to n <= " +
                                                      std::to_string(options.max_vertices) + ", got " +
                                                      std::to_string(n));
    }
    if (n < 4) throw Error(ErrorCode::InvalidParameters, "verification needs n >= 4");
}

ExtremalReport make_report(int n, int k, Bucket bucket) {
    ExtremalReport r;
    r.n = n;
    r.k = k;
    r.class_size = bucket.count;
    r.min_m1 = bucket.min_m1;
    r.min_m2 = bucket.min_m2;
    std::sort(bucket.argmin_m1.begin(), bucket.argmin_m1.end());
    std::sort(bucket.argmin_m2.begin(), bucket.argmin_m2.end());
    r.argmin_m1 = std::move(bucket.argmin_m1);
    r.argmin_m2 = std::move(bucket.argmin_m2);
    const auto claim = paper_lower_bounds(n);
    r.m1_matches_paper = r.min_m1 == claim.m1;
    r.m2_matches_paper = r.min_m2 == claim.m2;
    const std::vector<std::string> cnk{canonical_form(construct_cnk(n, k)).key};
    r.unique_extremal_is_cnk = r.argmin_m1 == cnk && r.argmin_m2 == cnk;
    return r;
}

}  // namespace

std::vector<ExtremalReport> verify_order(int n, const VerifyOptions& options) {
    check_verify_size(n, options);
    std::vector<Bucket> buckets(n - 2);  // k in [1, n-3]
    std::mutex mutex;
    auto consume = [&](const Graph& g) {
        if (g.size() < g.order()) return;
        const int k = static_cast<int>(cut_vertices(g).size());
        if (k < 1 || k > n - 3) return;
        const Index m1 = zagreb_m1(g), m2 = zagreb_m2(g);
        // Enumerated graphs are canonical representatives, so graph6 is the key.
        const std::string key = emit_g6(g);
        std::lock_guard lock(mutex);
        buckets[k].offer(m1, m2, key);
    };
    enumerate_connected(n, consume, {options.threads, std::max(options.max_vertices, n)});

    std::vector<ExtremalReport> out;
    for (int k = 1; k <= n - 3; ++k) out.push_back(make_report(n, k, std::move(buckets[k])));
    return out;
}

ExtremalReport verify_theorem(int n, int k, const VerifyOptions& options) {
    check_verify_size(n, options);
    if (k < 1 || k > n - 3) {
        throw Error(ErrorCode::InvalidParameters, "k must lie in [1, n-3], got k=" + std::to_string(k));
    }
    return verify_order(n, options)[k - 1];
}

std::vector<ExtremalReport> verify_range(int n_max, const VerifyOptions& options) {
    if (n_max > options.max_vertices) {
        throw Error(ErrorCode::SizeLimitExceeded, "verification limited to n <= " +
                                                      std::to_string(options.max_vertices) + ", got " +
                                                      std::to_string(n_max));
    }
    std::vector<ExtremalReport> out;
    for (int n = 4; n <= n_max; ++n) {
        auto reports = verify_order(n, options);
        out.insert(out.end(), std::make_move_iterator(reports.begin()), std::make_move_iterator(reports.end()));
    }
    return out;
}

}  // namespace zagreb
