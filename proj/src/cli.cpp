#include "zagreb/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "zagreb/canon.hpp"
#include "zagreb/error.hpp"
#include "zagreb/extremal.hpp"
#include "zagreb/graph.hpp"
#include "zagreb/indices.hpp"
#include "zagreb/rewrites.hpp"
#include "zagreb/structure.hpp"

namespace zagreb {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Graph read_graph(const std::string& arg, std::istream& in) {
    std::string text = arg;
    if (arg == "-") {
        if (!std::getline(in, text)) throw UsageError("no graph on stdin");
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
    return parse_g6(text);
}

std::vector<Vertex> parse_site(const std::string& text) {
    std::vector<Vertex> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find(',', pos), text.size());
        Vertex v = 0;
        const char* first = text.data() + pos;
        const char* last = text.data() + end;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (first == last || ec != std::errc{} || ptr != last) throw UsageError("bad vertex list '" + text + "'");
        out.push_back(v);
        pos = end + 1;
    }
    return out;
}

RewriteKind parse_kind(const std::string& name) {
    for (RewriteKind kind : {RewriteKind::OpI, RewriteKind::OpIb, RewriteKind::OpII, RewriteKind::OpIII,
                             RewriteKind::OpIV, RewriteKind::PathMerge, RewriteKind::MergeIdentified,
                             RewriteKind::BlockEdgeDelete}) {
        if (to_string(kind) == name) return kind;
    }
    throw UsageError("unknown rewrite '" + name + "'");
}

ordered_json block_json(const Graph& g) {
    const auto bd = decompose(g);
    ordered_json blocks = ordered_json::array();
    for (int b = 0; b < bd.block_count(); ++b) {
        blocks.push_back({{"vertices", bd.blocks[b]},
                          {"edges", bd.block_edges[b].size()},
                          {"cycle", is_cycle_block(g, bd, b)},
                          {"endblock", static_cast<bool>(bd.endblock[b])}});
    }
    ordered_json tree = ordered_json::array();
    for (auto [b, c] : bd.block_cut_tree) tree.push_back({b, bd.cut_vertices[c]});

    ordered_json pendant = nullptr;
    if (g.size() >= g.order()) {
        const auto ps = pendant_structure(g);
        ordered_json trees = ordered_json::array();
        for (const auto& t : ps.pendant_trees) {
            trees.push_back({{"anchor", t.anchor}, {"vertices", t.vertices}, {"is_path", t.is_path}});
        }
        ordered_json paths = ordered_json::array();
        for (const auto& p : ps.pendant_paths) {
            paths.push_back({{"anchor", p.anchor}, {"path", p.path}, {"length", p.length()}});
        }
        pendant = {{"core", ps.core}, {"pendant_trees", trees}, {"pendant_paths", paths}};
    }
    return {{"n", g.order()},
            {"m", g.size()},
            {"cut_vertices", bd.cut_vertices},
            {"blocks", blocks},
            {"block_cut_tree", tree},
            {"pendant", pendant}};
}

int exit_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::MalformedEncoding:
        case ErrorCode::UnsupportedSize: return kExitUsage;
        default: return kExitPrecondition;
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Zagreb indices of graphs with cut vertices", "zagreb"};
    app.require_subcommand(1);
    app.fallthrough();
    int threads = 1;
    auto* threads_opt = app.add_option("--threads", threads, "worker threads for enumerate and verify (env ZAGREB_THREADS)")
                            ->check(CLI::PositiveNumber);

    std::string graph_arg;
    int n = 0, k = 0, n_max = 0;
    std::string op, site_text, format = "json";
    bool no_preserve = false, trace = false;

    auto* indices = app.add_subcommand("indices", "print n, m, M1 and M2");
    indices->add_option("graph", graph_arg, "graph6 string, or - for stdin")->required();

    auto* blocks = app.add_subcommand("blocks", "print the block decomposition and pendant structure");
    blocks->add_option("graph", graph_arg)->required();

    auto* cnk = app.add_subcommand("cnk", "print graph6 of the tadpole C(n,k)");
    cnk->add_option("--n", n)->required();
    cnk->add_option("--k", k)->required();

    auto* rewrite = app.add_subcommand("rewrite", "apply one rewrite at a site");
    rewrite->add_option("--op", op, "I, Ib, II, III, IV, merge, merge-id or edge-del")->required();
    rewrite->add_option("--site", site_text, "comma-separated vertex list")->required();
    rewrite->add_option("graph", graph_arg)->required();

    auto* minimize_cmd = app.add_subcommand("minimize", "greedy descent towards C(n,k)");
    minimize_cmd->add_flag("--no-preserve-k", no_preserve);
    minimize_cmd->add_flag("--trace", trace);
    minimize_cmd->add_option("graph", graph_arg)->required();

    auto* enumerate = app.add_subcommand("enumerate", "list connected graphs as graph6, count on stderr");
    auto* k_opt = enumerate->add_option("--k", k);
    enumerate->add_option("--n", n)->required();

    auto* verify = app.add_subcommand("verify", "check the extremal bounds exhaustively");
    verify->add_option("--n-max", n_max)->required();
    verify->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));

    std::vector<const char*> argv{"zagreb"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }
    if (threads_opt->count() == 0) {
        if (const char* env = std::getenv("ZAGREB_THREADS"); env && *env) {
            const std::string_view text(env);
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), threads);
            if (ec != std::errc{} || ptr != text.data() + text.size() || threads < 1) {
                err << "zagreb: ZAGREB_THREADS must be a positive integer, got '" << env << "'\n";
                return kExitUsage;
            }
        }
    }

    try {
        if (indices->parsed()) {
            const Graph g = read_graph(graph_arg, in);
            const auto z = zagreb_indices(g);
            out << ordered_json{{"n", g.order()}, {"m", g.size()}, {"m1", z.m1}, {"m2", z.m2}}.dump(2) << '\n';
        } else if (blocks->parsed()) {
            out << block_json(read_graph(graph_arg, in)).dump(2) << '\n';
        } else if (cnk->parsed()) {
            out << emit_g6(construct_cnk(n, k)) << '\n';
        } else if (rewrite->parsed()) {
            const RewriteKind kind = parse_kind(op);
            const auto list = parse_site(site_text);
            if (static_cast<int>(list.size()) != site_arity(kind)) {
                throw UsageError("rewrite " + op + " takes " + std::to_string(site_arity(kind)) + " vertices");
            }
            const Graph g = read_graph(graph_arg, in);
            const auto r = zagreb::apply(g, site_from_list(g, kind, list));
            out << ordered_json{{"op", op},
                                {"site", list},
                                {"result", emit_g6(r.result)},
                                {"delta_m1", r.delta_m1},
                                {"delta_m2", r.delta_m2},
                                {"k_before", r.k_before},
                                {"k_after", r.k_after},
                                {"m_before", r.m_before},
                                {"m_after", r.m_after}}
                       .dump(2)
                << '\n';
        } else if (minimize_cmd->parsed()) {
            const Graph g = read_graph(graph_arg, in);
            const auto t = minimize(g, {!no_preserve});
            ordered_json j{{"initial", emit_g6(t.initial)},
                           {"final", emit_g6(t.final_graph)},
                           {"reason", std::string(to_string(t.reason))},
                           {"m1_initial", zagreb_m1(t.initial)},
                           {"m1_final", zagreb_m1(t.final_graph)},
                           {"m2_final", zagreb_m2(t.final_graph)},
                           {"step_count", t.steps.size()}};
            if (trace) {
                ordered_json steps = ordered_json::array();
                for (const auto& s : t.steps) {
                    steps.push_back({{"op", std::string(to_string(s.kind))},
                                     {"site", s.site},
                                     {"delta_m1", s.delta_m1},
                                     {"delta_m2", s.delta_m2},
                                     {"k_after", s.k_after}});
                }
                j["steps"] = steps;
            }
            out << j.dump(2) << '\n';
        } else if (enumerate->parsed()) {
            const bool filter = k_opt->count() > 0;
            std::uint64_t count = 0;
            enumerate_connected_ordered(
                n,
                [&](const Graph& g) {
                    if (filter && !in_vnk(g, n, k)) return;
                    out << emit_g6(g) << '\n';
                    ++count;
                },
                {threads, EnumerationOptions{}.max_vertices});
            err << count << '\n';
        } else if (verify->parsed()) {
            const auto reports = verify_range(n_max, {threads, VerifyOptions{}.max_vertices});
            if (format == "csv") {
                out << reports_to_csv(reports);
            } else if (format == "text") {
                out << reports_to_text(reports);
            } else {
                out << reports_to_json(reports);
            }
            for (const auto& r : reports) {
                if (!r.agrees_with_claims()) return kExitMismatch;
            }
        }
    } catch (const UsageError& e) {
        err << "zagreb: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "zagreb: " << e.what() << '\n';
        return exit_for(e.code());
    }
    return kExitOk;
}

}  // namespace zagreb
