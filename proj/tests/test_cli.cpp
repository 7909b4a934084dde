#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "zagreb/cli.hpp"

using namespace zagreb;

namespace {

struct Run {
    int status;
    std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int status = run_cli(args, in, out, err);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("indices") {
    const auto cnk = run({"cnk", "--n", "6", "--k", "2"});
    REQUIRE(cnk.status == 0);
    const std::string g6 = cnk.out.substr(0, cnk.out.size() - 1);
    auto r = run({"indices", g6});
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["n"] == 6);
    CHECK(j["m"] == 6);
    CHECK(j["m1"] == 26);
    CHECK(j["m2"] == 28);

    CHECK(run({"indices", "-"}, g6 + "\n").out == r.out);
}

TEST_CASE("blocks") {
    const auto r = run({"blocks", "El_G"});
    REQUIRE(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["cut_vertices"].size() == 2);
    CHECK(j["blocks"].size() == 3);
    CHECK(j["pendant"]["pendant_paths"].size() == 1);
    CHECK(nlohmann::json::parse(run({"blocks", "Dhc"}).out)["pendant"].is_object());
    CHECK(nlohmann::json::parse(run({"blocks", "Ch"}).out)["pendant"].is_null());
}

TEST_CASE("rewrite") {
    // Triangle 0,1,2 with leaf 3 on vertex 0.
    auto r = run({"rewrite", "--op", "I", "--site", "0,3,1,2", "C{"});
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["delta_m1"] == 2);
    CHECK(j["k_before"] == 1);
    CHECK(j["k_after"] == 0);

    r = run({"rewrite", "--op", "I", "--site", "0,1,2,3", "C{"});
    CHECK(r.status == 2);
    CHECK(r.err.find("pendant") != std::string::npos);
    CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);

    CHECK(run({"rewrite", "--op", "V", "--site", "0,1", "C{"}).status == 1);
    CHECK(run({"rewrite", "--op", "I", "--site", "0,1", "C{"}).status == 1);
    CHECK(run({"rewrite", "--op", "I", "--site", "0,x,1,2", "C{"}).status == 1);
}

TEST_CASE("minimize") {
    // Two triangles sharing vertex 0.
    auto r = run({"minimize", "--trace", "D{c"});
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["reason"] == "ReachedCnk");
    CHECK(j["m1_final"] == 22);
    CHECK(j["steps"].size() == 1);
    CHECK(j["steps"][0]["op"] == "IV");
    j = nlohmann::json::parse(run({"minimize", "D{c"}).out);
    CHECK_FALSE(j.contains("steps"));
    CHECK(run({"minimize", "--no-preserve-k", "D{c"}).status == 0);
    CHECK(run({"minimize", "Dhc"}).status == 2);
}

TEST_CASE("enumerate") {
    auto r = run({"enumerate", "--n", "5"});
    CHECK(r.status == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 21);
    CHECK(r.err == "21\n");
    r = run({"enumerate", "--n", "6", "--k", "2"});
    CHECK(r.err == std::to_string(std::count(r.out.begin(), r.out.end(), '\n')) + "\n");
    CHECK(run({"enumerate", "--n", "6", "--threads", "3"}).out == run({"enumerate", "--n", "6"}).out);
}

TEST_CASE("verify") {
    auto r = run({"verify", "--n-max", "5", "--format", "csv"});
    CHECK(r.status == 3);
    CHECK(r.out.find("5,1,6,22,23,true,false,true") != std::string::npos);
    r = run({"verify", "--n-max", "5"});
    CHECK(r.status == 3);
    CHECK(nlohmann::json::parse(r.out).size() == 3);
    CHECK(run({"verify", "--n-max", "12"}).status == 2);
    CHECK(run({"verify", "--n-max", "5", "--format", "xml"}).status == 1);
    CHECK(run({"--threads", "2", "verify", "--n-max", "6"}).out == run({"verify", "--n-max", "6"}).out);
}

TEST_CASE("thread count from the environment") {
    ::setenv("ZAGREB_THREADS", "0", 1);
    CHECK(run({"enumerate", "--n", "4"}).status == 1);
    CHECK(run({"enumerate", "--n", "4", "--threads", "2"}).status == 0);
    ::setenv("ZAGREB_THREADS", "2", 1);
    CHECK(run({"enumerate", "--n", "4"}).status == 0);
    ::unsetenv("ZAGREB_THREADS");
}

TEST_CASE("usage and parse errors") {
    CHECK(run({}).status == 1);
    CHECK(run({"frobnicate"}).status == 1);
    CHECK(run({"indices", "A"}).status == 1);
    CHECK(run({"indices", "-"}, "").status == 1);
    CHECK(run({"cnk", "--n", "5", "--k", "3"}).status == 2);
    CHECK(run({"enumerate", "--n", "4", "--threads", "0"}).status == 1);
    CHECK(run({"--help"}).status == 0);
}
