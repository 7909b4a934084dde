#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <thread>

#include "bitgraph.hpp"
#include "zagreb/canon.hpp"

namespace zagreb {

namespace {

using detail::BitGraph;
using detail::bit;

// The canonical deletion for a connected graph is a non-cut vertex of
// minimum (degree, neighbor-degree sum), ties broken by the canonical order.
// A child is accepted only if its new vertex is in the automorphism orbit of
// that vertex, so every class is produced from exactly one parent class.
class Augmenter {
public:
    bool accept(const BitGraph& child, int added, detail::CanonResult& canon) const {
        const std::uint64_t noncut = detail::all_bits(child.n) & ~detail::cut_vertex_mask(child);
        if (!(noncut & bit(added))) return false;

        auto invariant = [&](int x) {
            int sum = 0;
            for (std::uint64_t r = child.rows[x]; r; r &= r - 1) sum += child.degree(std::countr_zero(r));
            return child.degree(x) * 4096 + sum;
        };
        int best = std::numeric_limits<int>::max();
        for (std::uint64_t r = noncut; r; r &= r - 1) best = std::min(best, invariant(std::countr_zero(r)));
        std::uint64_t candidates = 0;
        for (std::uint64_t r = noncut; r; r &= r - 1) {
            const int x = std::countr_zero(r);
            if (invariant(x) == best) candidates |= bit(x);
        }
        if (!(candidates & bit(added))) return false;

        canon = detail::canonical_search(child);
        if (std::popcount(candidates) == 1) return true;

        int chosen = -1;
        for (int i = child.n - 1; i >= 0; --i) {
            if (candidates & bit(canon.order[i])) {
                chosen = canon.order[i];
                break;
            }
        }
        if (chosen == added) return true;
        if (same_orbit_known(canon, child.n, chosen, added)) return true;

        std::vector<int> mark_added(child.n, 0), mark_chosen(child.n, 0);
        mark_added[added] = 1;
        mark_chosen[chosen] = 1;
        return detail::canonical_search(child, mark_added).key == detail::canonical_search(child, mark_chosen).key;
    }

private:
    static bool same_orbit_known(const detail::CanonResult& canon, int n, int a, int b) {
        if (canon.automorphisms.empty()) return false;
        std::array<int, detail::kMaxBitVertices> parent{};
        std::iota(parent.begin(), parent.begin() + n, 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& gamma : canon.automorphisms) {
            for (int v = 0; v < n; ++v) {
                const int ra = find(v), rb = find(gamma[v]);
                if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
            }
        }
        return find(a) == find(b);
    }
};

template <typename Emit>
void expand(const Augmenter& aug, const BitGraph& parent, int target, Emit& emit) {
    const int added = parent.n;
    std::set<detail::AdjacencyKey> produced;
    const std::uint64_t subsets = bit(parent.n);
    for (std::uint64_t s = 1; s < subsets; ++s) {
        BitGraph child = parent;
        child.n = parent.n + 1;
        child.rows[added] = s;
        for (std::uint64_t r = s; r; r &= r - 1) child.rows[std::countr_zero(r)] |= bit(added);

        detail::CanonResult canon;
        if (!aug.accept(child, added, canon)) continue;
        if (!produced.insert(canon.key).second) continue;

        const BitGraph next = detail::apply_order(child, canon.order);
        if (next.n == target) {
            emit(next);
        } else {
            expand(aug, next, target, emit);
        }
    }
}

BitGraph single_vertex() {
    BitGraph g;
    g.n = 1;
    return g;
}

void check_enumeration_size(int n, const EnumerationOptions& options) {
    if (n < 1) throw Error(ErrorCode::InvalidParameters, "vertex count must be positive");
    const int limit = std::min(options.max_vertices, 16);
    if (n > limit) {
        throw Error(ErrorCode::SizeLimitExceeded,
                    "enumeration limited to " + std::to_string(limit) + " vertices, got " + std::to_string(n));
    }
    if (options.threads < 1) throw Error(ErrorCode::InvalidParameters, "thread count must be positive");
}

// Roots of independent subtrees: all classes two levels above the leaves.
std::vector<BitGraph> work_units(const Augmenter& aug, int n) {
    const int level = std::max(1, n - 2);
    std::vector<BitGraph> units;
    if (level == 1) {
        units.push_back(single_vertex());
        return units;
    }
    auto collect = [&](const BitGraph& g) { units.push_back(g); };
    expand(aug, single_vertex(), level, collect);
    return units;
}

template <typename Worker>
void run_workers(int threads, std::size_t unit_count, Worker worker) {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                try {
                    for (std::size_t i = next++; i < unit_count; i = next++) worker(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    next = unit_count;
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::uint64_t enumerate_connected(int n, const GraphConsumer& consumer, const EnumerationOptions& options) {
    check_enumeration_size(n, options);
    const Augmenter aug;
    std::atomic<std::uint64_t> count{0};
    auto emit = [&](const BitGraph& g) {
        consumer(detail::to_graph(g));
        ++count;
    };
    if (n == 1) {
        emit(single_vertex());
        return count;
    }
    if (options.threads == 1) {
        expand(aug, single_vertex(), n, emit);
        return count;
    }
    const auto units = work_units(aug, n);
    run_workers(options.threads, units.size(), [&](std::size_t i) {
        if (units[i].n == n) {
            emit(units[i]);
        } else {
            expand(aug, units[i], n, emit);
        }
    });
    return count;
}

std::uint64_t enumerate_connected_ordered(int n, const GraphConsumer& consumer, const EnumerationOptions& options) {
    check_enumeration_size(n, options);
    if (options.threads == 1 || n <= 3) return enumerate_connected(n, consumer, {1, options.max_vertices});

    const Augmenter aug;
    const auto units = work_units(aug, n);
    std::vector<std::optional<std::vector<BitGraph>>> done(units.size());
    std::mutex mutex;
    std::condition_variable ready;
    std::uint64_t count = 0;

    std::exception_ptr failure;
    std::jthread producer([&] {
        try {
            run_workers(options.threads, units.size(), [&](std::size_t i) {
                std::vector<BitGraph> out;
                auto collect = [&](const BitGraph& g) { out.push_back(g); };
                expand(aug, units[i], n, collect);
                std::lock_guard lock(mutex);
                done[i] = std::move(out);
                ready.notify_one();
            });
        } catch (...) {
            std::lock_guard lock(mutex);
            failure = std::current_exception();
            ready.notify_one();
        }
    });

    for (std::size_t i = 0; i < units.size(); ++i) {
        std::vector<BitGraph> batch;
        {
            std::unique_lock lock(mutex);
            ready.wait(lock, [&] { return done[i].has_value() || failure; });
            if (failure) break;
            batch = std::move(*done[i]);
            done[i].reset();
        }
        for (const auto& g : batch) {
            consumer(detail::to_graph(g));
            ++count;
        }
    }
    producer.join();
    if (failure) std::rethrow_exception(failure);
    return count;
}

}  // namespace zagreb
