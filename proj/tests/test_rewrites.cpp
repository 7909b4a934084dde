#include "doctest.h"
#include "oracles.hpp"
#include "zagreb/canon.hpp"
#include "zagreb/rewrites.hpp"
#include "zagreb/structure.hpp"

using namespace zagreb;

namespace {

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::InvalidInput;
}

bool iso(const Graph& a, const Graph& b) { return oracle::isomorphic(oracle::matrix(a), oracle::matrix(b)); }

const Graph triangle_pendant = build(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
const Graph c4_pendant = build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
const Graph triangle_two_pendants = build(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}});
const Graph triangle_two_paths = build(7, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
const Graph joined_triangles = build(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {3, 5}});
const Graph butterfly = build(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
const Graph triangle_fork = build(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {0, 4}});

}  // namespace

TEST_CASE("op_i") {
    auto r = op_i(triangle_pendant, {0, 3, 1, 2});
    CHECK(iso(r.result, cycle_graph(4)));
    CHECK(r.delta_m1 == 2);
    CHECK(r.delta_m2 == 3);
    CHECK(r.k_before == 1);
    CHECK(r.k_after == 0);

    r = op_i(c4_pendant, {0, 4, 2, 3});
    CHECK(iso(r.result, cycle_graph(5)));
    CHECK(r.delta_m1 == 2);

    CHECK(code_of([] { op_i(c4_pendant, {0, 1, 2, 3}); }) == ErrorCode::PreconditionViolated);
    CHECK(code_of([] { op_i(c4_pendant, {0, 4, 0, 1}); }) == ErrorCode::DegenerateSite);
}

TEST_CASE("op_i M2 change can equal f(d(u1), d(u2))") {
    // Triangle 2,3,5; vertex 4 hangs off 5 and carries leaves 0 and 1.
    const Graph g = parse_g6("E@ow");
    const auto r = op_i(g, {4, 0, 2, 3});
    CHECK(r.delta_m2 == 3);
    CHECK(gap_f(2, 2) == 3);
    CHECK(r.delta_m2 >= gap_g(2, 2));
}

TEST_CASE("precondition messages name the clause") {
    try {
        op_i(c4_pendant, {0, 1, 2, 3});
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("pendant") != std::string::npos);
    }
}

TEST_CASE("op_i_b") {
    auto r = op_i_b(triangle_two_pendants, 0, 3, 4);
    CHECK(iso(r.result, construct_cnk(5, 2)));
    CHECK(r.delta_m1 == 2);
    CHECK(r.result.has_edge(4, 3));
    CHECK(code_of([] { op_i_b(triangle_two_pendants, 0, 3, 3); }) == ErrorCode::PreconditionViolated);
    CHECK(code_of([] { op_i_b(triangle_pendant, 0, 3, 1); }) == ErrorCode::PreconditionViolated);
}

TEST_CASE("op_i_b can leave M2 unchanged") {
    // Square 4,6,5,7 with leaf 3 on vertex 6 and leaves 0, 1, 2 on vertex 7.
    const Graph g = parse_g6("G???~W");
    const auto r = op_i_b(g, 6, 3, 0);
    CHECK(r.delta_m1 == 2);
    CHECK(r.delta_m2 == 0);
    bool listed = false;
    for (const auto& s : find_sites(g, RewriteKind::OpIb))
        listed = listed || site_vertices(s) == std::vector<Vertex>{6, 3, 0};
    CHECK(listed);
}

TEST_CASE("op_ii") {
    auto r = op_ii(triangle_two_paths, {0, 3, 4, 6, 1, 2});
    CHECK(iso(r.result, construct_cnk(7, 3)));
    CHECK(r.delta_m1 == 4);
    CHECK(r.delta_m2 >= gap_g(2, 2) + 1);


    EdgeList e = triangle_two_paths.edges();
    e.push_back({0, 7});
    const Graph with_leaf = build(8, e);
    CHECK(code_of([&] { op_ii(with_leaf, {0, 3, 4, 6, 1, 2}); }) == ErrorCode::PreconditionViolated);

    const Graph one_path = build(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {1, 5}});
    CHECK(code_of([&] { op_ii(one_path, {0, 3, 4, 5, 1, 2}); }) == ErrorCode::PreconditionViolated);
}

TEST_CASE("op_iii") {
    auto r = op_iii(joined_triangles, {3, 4, 5, 4, 1, 2});
    CHECK(iso(r.result, construct_cnk(6, 2)));
    CHECK(r.delta_m1 == 8);
    CHECK(r.delta_m2 == 13);
    CHECK(r.m_after == r.m_before - 1);
    CHECK(degree(r.result, 5) == 1);

    EdgeList e = joined_triangles.edges();
    e.push_back({4, 6});
    const Graph middle = build(7, e);
    CHECK(code_of([&] { op_iii(middle, {3, 4, 5, 4, 1, 2}); }) == ErrorCode::PreconditionViolated);
    CHECK(code_of([] { op_iii(joined_triangles, {3, 4, 5, 4, 0, 3}); }) == ErrorCode::PreconditionViolated);
}

TEST_CASE("op_iv") {
    auto r = op_iv(butterfly, {0, 1, 3, 4});
    CHECK(iso(r.result, construct_cnk(5, 1)));
    CHECK(r.delta_m1 == 10);
    CHECK(r.delta_m2 == 17);
    CHECK(r.m_after == r.m_before - 1);

    CHECK(code_of([] { op_iv(joined_triangles, {3, 0, 4, 5}); }) == ErrorCode::PreconditionViolated);
    EdgeList e = butterfly.edges();
    e.push_back({3, 5});
    const Graph tailed = build(6, e);
    CHECK(code_of([&] { op_iv(tailed, {0, 1, 3, 4}); }) == ErrorCode::PreconditionViolated);
    // Two triangles at 0 where v0v2 is already present.
    const Graph fan = build(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}, {1, 4}});
    CHECK_THROWS_AS(op_iv(fan, {0, 1, 3, 4}), Error);
}

TEST_CASE("path_merge") {
    auto r = path_merge(triangle_two_pendants, 0, 1, {0, 3}, {1, 4});
    CHECK(iso(r.result, construct_cnk(5, 2)));
    CHECK(zagreb_m1(triangle_two_pendants) == 24);
    CHECK(zagreb_m1(r.result) == 22);
    CHECK(code_of([] { path_merge(triangle_two_pendants, 0, 0, {0, 3}, {0, 3}); }) ==
          ErrorCode::PreconditionViolated);
    const Graph off = build(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {3, 5}});
    CHECK(code_of([&] { path_merge(off, 3, 0, {3, 4}, {0, 1}); }) == ErrorCode::PreconditionViolated);
}

TEST_CASE("merge_identified") {
    auto r = merge_identified(triangle_fork, 0, {0, 3}, {0, 4});
    CHECK(iso(r.result, construct_cnk(5, 1)));
    CHECK(zagreb_m1(triangle_fork) == 26);
    CHECK(zagreb_m1(r.result) == 22);
    CHECK(r.result.order() == triangle_fork.order());

    const Graph long_paths = build(7, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    r = merge_identified(long_paths, 0, {0, 3, 4}, {0, 5, 6}, 1, 2);
    CHECK(iso(r.result, construct_cnk(7, 3)));

    CHECK(code_of([] { merge_identified(triangle_pendant, 0, {0, 3}, {0, 3}); }) ==
          ErrorCode::PreconditionViolated);
    const Graph off = build(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {3, 5}});
    CHECK(code_of([&] { merge_identified(off, 3, {3, 4}, {3, 5}); }) == ErrorCode::PreconditionViolated);
}

TEST_CASE("block_edge_delete") {
    auto r = block_edge_delete(complete_graph(4), 0, 1);
    CHECK(r.delta_m1 == 10);
    CHECK(r.k_after == r.k_before);
    CHECK(code_of([] { block_edge_delete(cycle_graph(5), 0, 1); }) == ErrorCode::PreconditionViolated);
    const Graph chorded = add_edge(cycle_graph(4), 0, 2);
    r = block_edge_delete(chorded, 0, 2);
    CHECK(iso(r.result, cycle_graph(4)));
    CHECK(r.delta_m1 == 10);
    // Removing a rim edge of the chorded square leaves a cut vertex.
    CHECK(code_of([&] { block_edge_delete(chorded, 0, 1); }) == ErrorCode::PreconditionViolated);
    CHECK(code_of([] { block_edge_delete(complete_graph(3), 0, 1); }) == ErrorCode::PreconditionViolated);
    CHECK(code_of([] { block_edge_delete(cycle_graph(5), 0, 2); }) == ErrorCode::EdgeAbsent);
}

TEST_CASE("find_sites") {
    for (int n = 4; n <= 9; ++n)
        for (int k = 1; k <= n - 3; ++k) CHECK(find_sites(construct_cnk(n, k)).empty());
    CHECK_FALSE(find_sites(butterfly, RewriteKind::OpIV).empty());
    CHECK_FALSE(find_sites(complete_graph(4), RewriteKind::BlockEdgeDelete).empty());
    CHECK(find_sites(path_graph(5)).empty());
    for (const auto& s : find_sites(butterfly)) CHECK(kind_of(s) == RewriteKind::OpIV);
}

TEST_CASE("site lists") {
    const auto s = site_from_list(triangle_fork, RewriteKind::MergeIdentified, {0, 3, 4, 1, 2});
    const auto& m = std::get<MergeIdentifiedSite>(s);
    CHECK(m.path_a == std::vector<Vertex>{0, 3});
    CHECK(m.path_b == std::vector<Vertex>{0, 4});
    CHECK(site_vertices(site_from_list(butterfly, RewriteKind::OpIV, {0, 1, 3, 4})) == std::vector<Vertex>{0, 1, 3, 4});
    CHECK(code_of([] { site_from_list(butterfly, RewriteKind::OpIV, {0, 1}); }) == ErrorCode::InvalidParameters);
    CHECK(to_string(RewriteKind::MergeIdentified) == "merge-id");
}

namespace {

int deg_of(const Graph& g, Vertex v) { return degree(g, v); }

}  // namespace

TEST_CASE("every site on small graphs obeys the decrease laws") {
    std::size_t sites = 0;
    for (int n = 3; n <= 6; ++n) {
        enumerate_connected(n, [&](const Graph& g) {
            if (g.size() < g.order()) return;
            const auto a = oracle::matrix(g);
            for (const auto& site : find_sites(g)) {
                ++sites;
                const auto r = zagreb::apply(g, site);
                const auto b = oracle::matrix(r.result);
                INFO(emit_g6(g), " ", to_string(kind_of(site)));
                CHECK(r.delta_m1 == oracle::m1(a) - oracle::m1(b));
                CHECK(r.delta_m2 == oracle::m2(a) - oracle::m2(b));
                CHECK(oracle::connected(b));
                CHECK(r.k_before == static_cast<int>(oracle::cut_vertices(a).size()));
                CHECK(r.k_after == static_cast<int>(oracle::cut_vertices(b).size()));
                CHECK(r.result.order() == n);
                const RewriteKind kind = kind_of(site);
                switch (kind) {
                    case RewriteKind::PathMerge:
                    case RewriteKind::MergeIdentified:
                        CHECK(r.delta_m1 >= 0);
                        CHECK(r.delta_m2 >= 0);
                        break;
                    default:
                        CHECK(r.delta_m1 > 0);
                        CHECK(r.delta_m2 > 0);
                }
                switch (kind) {
                    case RewriteKind::OpI:
                    case RewriteKind::OpIb:
                    case RewriteKind::OpII:
                    case RewriteKind::PathMerge:
                        CHECK(r.m_after == r.m_before);
                        break;
                    case RewriteKind::OpIII:
                    case RewriteKind::OpIV:
                        CHECK(r.m_after == r.m_before - 1);
                        break;
                    default: break;
                }
                if (kind == RewriteKind::OpI || kind == RewriteKind::OpII || kind == RewriteKind::OpIII)
                    CHECK(r.delta_m1 >= 2);
                if (kind == RewriteKind::OpIV) CHECK(r.delta_m1 >= 10);
                if (kind == RewriteKind::OpII) {
                    const auto& s = std::get<OpIISite>(site);
                    CHECK(r.delta_m2 >= gap_g(deg_of(g, s.w1), deg_of(g, s.w2)) + 1);
                }
                if (kind == RewriteKind::OpI) {
                    const auto& s = std::get<OpISite>(site);
                    // Exact change is d(v) + sum of the other neighbor degrees + g(d(u1), d(u2)) - 5.
                    CHECK(r.delta_m2 >= gap_g(deg_of(g, s.u1), deg_of(g, s.u2)));
                }
            }
        });
    }
    CHECK(sites > 500);
}
