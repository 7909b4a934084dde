#include "zagreb/canon.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bitgraph.hpp"

namespace zagreb {

namespace detail {

BitGraph to_bitgraph(const Graph& g) {
    if (g.order() > kMaxBitVertices) {
        throw Error(ErrorCode::SizeLimitExceeded, "bitset kernel supports at most 64 vertices");
    }
    BitGraph out;
    out.n = g.order();
    for (const auto& [u, v] : g.edges()) {
        out.rows[u] |= bit(v);
        out.rows[v] |= bit(u);
    }
    return out;
}

Graph to_graph(const BitGraph& g) {
    EdgeList edges;
    for (int u = 0; u < g.n; ++u) {
        for (std::uint64_t rest = g.rows[u] & ~all_bits(u + 1); rest; rest &= rest - 1) {
            edges.push_back({u, std::countr_zero(rest)});
        }
    }
    return build(g.n, edges);
}

BitGraph apply_order(const BitGraph& g, const Permutation& order) {
    Permutation position{};
    for (int i = 0; i < g.n; ++i) position[order[i]] = i;
    BitGraph out;
    out.n = g.n;
    for (int i = 0; i < g.n; ++i) {
        std::uint64_t row = 0;
        for (std::uint64_t rest = g.rows[order[i]]; rest; rest &= rest - 1) row |= bit(position[std::countr_zero(rest)]);
        out.rows[i] = row;
    }
    return out;
}

std::uint64_t cut_vertex_mask(const BitGraph& g) {
    const std::uint64_t everything = all_bits(g.n);
    std::uint64_t cuts = 0;
    if (g.n <= 2) return 0;
    for (int x = 0; x < g.n; ++x) {
        const std::uint64_t alive = everything & ~bit(x);
        std::uint64_t reached = alive & (~alive + 1);  // lowest remaining vertex
        std::uint64_t frontier = reached;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f; f &= f - 1) next |= g.rows[std::countr_zero(f)];
            next &= alive & ~reached;
            reached |= next;
            frontier = next;
        }
        if (reached != alive) cuts |= bit(x);
    }
    return cuts;
}

namespace {

// Ordered partition of the vertex set: cells are maximal runs of lab between
// consecutive set bits of starts.
struct Partition {
    Permutation lab{};
    std::uint64_t starts = 0;
};

int cell_end(const Partition& p, int begin, int n) {
    const std::uint64_t later = p.starts & ~all_bits(begin + 1);
    return later ? std::countr_zero(later) : n;
}

class CanonSearch {
public:
    explicit CanonSearch(const BitGraph& g) : g_(g) {}

    CanonResult run(std::span<const int> colors) {
        const int n = g_.n;
        Partition root;
        std::iota(root.lab.begin(), root.lab.begin() + n, 0);
        if (!colors.empty()) {
            std::stable_sort(root.lab.begin(), root.lab.begin() + n,
                             [&](int a, int b) { return colors[a] < colors[b]; });
        }
        root.starts = n > 0 ? 1 : 0;
        for (int i = 1; i < n && !colors.empty(); ++i) {
            if (colors[root.lab[i]] != colors[root.lab[i - 1]]) root.starts |= bit(i);
        }
        refine(root);
        std::vector<int> prefix;
        search(root, prefix);
        CanonResult out;
        out.order = best_order_;
        out.key = best_key_;
        out.automorphisms = std::move(automorphisms_);
        return out;
    }

private:
    // Splits cells by neighbor counts into other cells until the partition is
    // equitable. Sub-cells are ordered by ascending count, so the result
    // depends only on the structure, never on vertex ids.
    void refine(Partition& p) const {
        const int n = g_.n;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int w = 0; w < n; w = cell_end(p, w, n)) {
                std::uint64_t splitter = 0;
                const int w_end = cell_end(p, w, n);
                for (int i = w; i < w_end; ++i) splitter |= bit(p.lab[i]);
                for (int x = 0; x < n;) {
                    const int x_end = cell_end(p, x, n);
                    if (x_end - x > 1 && split_cell(p, x, x_end, splitter)) changed = true;
                    x = x_end;
                }
            }
        }
    }

    bool split_cell(Partition& p, int begin, int end, std::uint64_t splitter) const {
        std::array<int, kMaxBitVertices> count{};
        bool uniform = true;
        for (int i = begin; i < end; ++i) {
            count[p.lab[i]] = std::popcount(g_.rows[p.lab[i]] & splitter);
            if (count[p.lab[i]] != count[p.lab[begin]]) uniform = false;
        }
        if (uniform) return false;
        std::sort(p.lab.begin() + begin, p.lab.begin() + end,
                  [&](int a, int b) { return count[a] != count[b] ? count[a] < count[b] : a < b; });
        for (int i = begin + 1; i < end; ++i) {
            if (count[p.lab[i]] != count[p.lab[i - 1]]) p.starts |= bit(i);
        }
        return true;
    }

    AdjacencyKey key_of(const Permutation& order) const {
        AdjacencyKey key;
        int k = 0;
        for (int j = 1; j < g_.n; ++j) {
            const std::uint64_t row = g_.rows[order[j]];
            for (int i = 0; i < j; ++i, ++k) {
                if ((row >> order[i]) & 1) key.words[k / 64] |= std::uint64_t{1} << (63 - k % 64);
            }
        }
        return key;
    }

    void leaf(const Partition& p) {
        const AdjacencyKey key = key_of(p.lab);
        if (!have_best_ || key < best_key_) {
            best_key_ = key;
            best_order_ = p.lab;
            have_best_ = true;
        } else if (key == best_key_) {
            Permutation gamma{};
            for (int i = 0; i < g_.n; ++i) gamma[p.lab[i]] = best_order_[i];
            automorphisms_.push_back(gamma);
        }
    }

    bool twins(int a, int b) const {
        return (g_.rows[a] & ~bit(b)) == (g_.rows[b] & ~bit(a));
    }

    // True when x is known to be equivalent to an explored sibling under an
    // automorphism fixing the individualized prefix pointwise.
    bool pruned(int x, const std::vector<int>& explored, const std::vector<int>& prefix) const {
        for (int y : explored) {
            if (twins(x, y)) return true;
        }
        if (explored.empty() || automorphisms_.empty()) return false;
        std::array<int, kMaxBitVertices> parent{};
        std::iota(parent.begin(), parent.begin() + g_.n, 0);
        auto find = [&](int a) {
            while (parent[a] != a) a = parent[a] = parent[parent[a]];
            return a;
        };
        for (const auto& gamma : automorphisms_) {
            const bool fixes_prefix =
                std::all_of(prefix.begin(), prefix.end(), [&](int v) { return gamma[v] == v; });
            if (!fixes_prefix) continue;
            for (int v = 0; v < g_.n; ++v) {
                const int a = find(v), b = find(gamma[v]);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }
        const int rx = find(x);
        return std::any_of(explored.begin(), explored.end(), [&](int y) { return find(y) == rx; });
    }

    void search(const Partition& p, std::vector<int>& prefix) {
        const int n = g_.n;
        int target = -1, target_end = -1;
        for (int c = 0; c < n; c = cell_end(p, c, n)) {
            if (cell_end(p, c, n) - c > 1) {
                target = c;
                target_end = cell_end(p, c, n);
                break;
            }
        }
        if (target < 0) {
            leaf(p);
            return;
        }
        std::vector<int> members(p.lab.begin() + target, p.lab.begin() + target_end);
        std::sort(members.begin(), members.end());
        std::vector<int> explored;
        for (int x : members) {
            if (pruned(x, explored, prefix)) continue;
            Partition child = p;
            auto pos = std::find(child.lab.begin() + target, child.lab.begin() + target_end, x);
            std::iter_swap(child.lab.begin() + target, pos);
            child.starts |= bit(target + 1);
            refine(child);
            prefix.push_back(x);
            search(child, prefix);
            prefix.pop_back();
            explored.push_back(x);
        }
    }

    const BitGraph& g_;
    bool have_best_ = false;
    AdjacencyKey best_key_;
    Permutation best_order_{};
    std::vector<Permutation> automorphisms_;
};

}  // namespace

CanonResult canonical_search(const BitGraph& g, std::span<const int> colors) {
    return CanonSearch(g).run(colors);
}

}  // namespace detail

namespace {

void check_canon_size(const Graph& g, const CanonOptions& options) {
    const int limit = std::min(options.max_vertices, detail::kMaxBitVertices);
    if (g.order() > limit) {
        throw Error(ErrorCode::SizeLimitExceeded,
                    "canonical labeling limited to " + std::to_string(limit) + " vertices, got " +
                        std::to_string(g.order()));
    }
}

}  // namespace

std::vector<Vertex> canonical_labeling(const Graph& g, std::span<const int> colors, const CanonOptions& options) {
    check_canon_size(g, options);
    if (!colors.empty() && static_cast<int>(colors.size()) != g.order()) {
        throw Error(ErrorCode::InvalidParameters, "coloring length differs from vertex count");
    }
    const auto result = detail::canonical_search(detail::to_bitgraph(g), colors);
    return {result.order.begin(), result.order.begin() + g.order()};
}

Graph canonical_graph(const Graph& g, const CanonOptions& options) {
    const auto order = canonical_labeling(g, {}, options);
    std::vector<Vertex> new_id(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) new_id[order[i]] = static_cast<Vertex>(i);
    return relabel(g, new_id);
}

CanonicalForm canonical_form(const Graph& g, const CanonOptions& options) {
    return {emit_g6(canonical_graph(g, options))};
}

bool is_isomorphic(const Graph& a, const Graph& b, const CanonOptions& options) {
    check_canon_size(a, options);
    check_canon_size(b, options);
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_form(a, options) == canonical_form(b, options);
}

}  // namespace zagreb
