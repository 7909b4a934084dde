#include <algorithm>
#include <mutex>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "zagreb/canon.hpp"
#include "zagreb/structure.hpp"

using namespace zagreb;

namespace {

Graph shuffled(const Graph& g, std::mt19937_64& rng) {
    std::vector<Vertex> p(g.order());
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return relabel(g, p);
}

Graph random_graph(std::mt19937_64& rng, int n, double density) {
    std::bernoulli_distribution coin(density);
    EdgeList e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) e.push_back({u, v});
    return build(n, e);
}

}  // namespace

TEST_CASE("canonical form is a relabeling invariant") {
    std::mt19937_64 rng(1);
    const Graph cnk = construct_cnk(6, 2);
    CHECK(canonical_form(shuffled(cnk, rng)) == canonical_form(shuffled(cnk, rng)));
    CHECK(canonical_form(cycle_graph(4)) != canonical_form(path_graph(4)));
    CHECK(canonical_form(build(3, {{2, 1}, {0, 2}, {1, 0}})) == canonical_form(complete_graph(3)));

    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 16);
        const Graph g = random_graph(rng, n, 0.1 + 0.8 * (trial % 5) / 4.0);
        const auto key = canonical_form(g);
        CHECK(canonical_form(shuffled(g, rng)) == key);
        CHECK(emit_g6(canonical_graph(g)) == key.key);
    }
}

TEST_CASE("canonical labeling is a permutation onto an isomorphic graph") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = random_graph(rng, 7, 0.4);
        auto order = canonical_labeling(g);
        std::vector<Vertex> sorted = order;
        std::sort(sorted.begin(), sorted.end());
        std::vector<Vertex> id(7);
        std::iota(id.begin(), id.end(), 0);
        CHECK(sorted == id);
        CHECK(oracle::isomorphic(oracle::matrix(g), oracle::matrix(canonical_graph(g))));
    }
}

TEST_CASE("regular and symmetric graphs") {
    std::mt19937_64 rng(4);
    // Petersen graph against a relabeled copy and against the 5-prism.
    const Graph petersen = build(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8},
                                      {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
    const Graph prism = build(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8},
                                   {4, 9}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 5}});
    CHECK(is_isomorphic(petersen, shuffled(petersen, rng)));
    CHECK_FALSE(is_isomorphic(petersen, prism));
    CHECK(is_isomorphic(complete_graph(12), shuffled(complete_graph(12), rng)));
    CHECK(is_isomorphic(cycle_graph(16), shuffled(cycle_graph(16), rng)));
}

TEST_CASE("canonical keys match the brute-force isomorphism oracle") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);
        const Graph a = random_graph(rng, n, 0.5);
        const Graph b = random_graph(rng, n, 0.5);
        CHECK(is_isomorphic(a, b) == oracle::isomorphic(oracle::matrix(a), oracle::matrix(b)));
    }
}

TEST_CASE("is_isomorphic examples") {
    std::mt19937_64 rng(6);
    CHECK(is_isomorphic(cycle_graph(5), shuffled(cycle_graph(5), rng)));
    const Graph joined_triangles = build(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}});
    CHECK_FALSE(is_isomorphic(cycle_graph(6), joined_triangles));
    const Graph butterfly = build(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
    CHECK_FALSE(is_isomorphic(construct_cnk(5, 1), butterfly));
    CHECK_FALSE(oracle::isomorphic(oracle::matrix(construct_cnk(5, 1)), oracle::matrix(butterfly)));
    CHECK_FALSE(is_isomorphic(cycle_graph(5), cycle_graph(6)));
}

TEST_CASE("colored labeling respects colors") {
    // P3 with the middle vertex colored apart from the ends vs. an end colored apart.
    const Graph p3 = path_graph(3);
    const std::vector<int> mid{0, 1, 0}, end{1, 0, 0};
    const auto a = canonical_labeling(p3, mid);
    const auto b = canonical_labeling(p3, end);
    // Lower colors come first.
    CHECK(mid[a[0]] == 0);
    CHECK(mid[a[2]] == 1);
    CHECK(end[b[2]] == 1);
    CHECK(end[b[0]] == 0);
}

TEST_CASE("size limit") {
    CHECK_THROWS_AS(canonical_form(cycle_graph(17)), Error);
    CHECK(canonical_form(cycle_graph(40), CanonOptions{64}).key.size() > 0);
}

TEST_CASE("enumeration counts") {
    const std::uint64_t expected[] = {1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) {
        std::set<std::string> keys;
        std::uint64_t calls = 0;
        const auto count = enumerate_connected(n, [&](const Graph& g) {
            ++calls;
            CHECK(is_connected(g));
            CHECK(emit_g6(g) == canonical_form(g).key);
            keys.insert(emit_g6(g));
        });
        CHECK(count == expected[n - 1]);
        CHECK(calls == count);
        CHECK(keys.size() == count);
    }
}

TEST_CASE("enumeration matches the labeled-graph oracle") {
    for (int n = 1; n <= 6; ++n) {
        const auto classes = oracle::connected_classes(n);
        std::set<std::string> found;
        enumerate_connected(n, [&](const Graph& g) { found.insert(oracle::brute_canon(oracle::matrix(g))); });
        CHECK(found == classes);
    }
}

TEST_CASE("parallel enumeration") {
    std::vector<std::string> serial;
    enumerate_connected_ordered(7, [&](const Graph& g) { serial.push_back(emit_g6(g)); });
    for (int threads : {2, 3, 8}) {
        std::vector<std::string> ordered;
        enumerate_connected_ordered(7, [&](const Graph& g) { ordered.push_back(emit_g6(g)); }, {threads});
        CHECK(ordered == serial);

        std::mutex m;
        std::vector<std::string> loose;
        enumerate_connected(7, [&](const Graph& g) {
            std::lock_guard lock(m);
            loose.push_back(emit_g6(g));
        }, {threads});
        std::sort(loose.begin(), loose.end());
        std::vector<std::string> sorted = serial;
        std::sort(sorted.begin(), sorted.end());
        CHECK(loose == sorted);
    }
}

TEST_CASE("enumeration parameters") {
    CHECK_THROWS_AS(enumerate_connected(0, [](const Graph&) {}), Error);
    CHECK_THROWS_AS(enumerate_connected(4, [](const Graph&) {}, {0}), Error);
    CHECK_THROWS_AS(enumerate_connected(11, [](const Graph&) {}), Error);
}
