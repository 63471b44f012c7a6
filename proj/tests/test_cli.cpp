#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "polylab/cli.hpp"

namespace {

struct RunResult {
    int status;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int status = polylab::cli::run(std::move(args), out, err);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("quilt gen round trips through verify") {
    std::string path = "cli_test_quilt.json";
    auto gen = run_cli({"quilt", "gen", "--eps", "1/4x"});
    CHECK(gen.status != 0);  // malformed eps

    gen = run_cli({"quilt", "gen", "--eps", "1/2", "--out", path});
    REQUIRE(gen.status == 0);
    auto verify = run_cli({"quilt", "verify", "--in", path});
    CHECK(verify.status == 0);
    CHECK(verify.out.find("\"is_quilt\": true") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("quilt gen rejects eps = 0 and unreachable eps") {
    CHECK(run_cli({"quilt", "gen", "--eps", "0"}).status != 0);
    auto r = run_cli({"quilt", "gen", "--eps", "1/8"});
    CHECK(r.status != 0);
    CHECK(r.err.find("union area") != std::string::npos);
}

TEST_CASE("determinism: identical invocations give identical bytes") {
    auto a = run_cli({"assemble", "--blocks", "1", "--seed", "7", "--targets", "2",
                      "--grid", "32"});
    auto b = run_cli({"assemble", "--blocks", "1", "--seed", "7", "--targets", "2",
                      "--grid", "32"});
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    auto c = run_cli({"assemble", "--blocks", "1", "--seed", "8", "--targets", "2",
                      "--grid", "32"});
    CHECK(c.out != a.out);  // the seed is part of the report
}

TEST_CASE("seq pipeline emits the constants schema") {
    std::string path = "cli_test_quilt2.json";
    REQUIRE(run_cli({"quilt", "gen", "--eps", "1", "--out", path}).status == 0);
    auto r = run_cli({"seq", "carleson", "--quilt", path});
    CHECK(r.status == 0);
    for (const char* key : {"gamma", "delta", "one_box_sup", "open_set_ratio"})
        CHECK(r.out.find(key) != std::string::npos);
    auto g = run_cli({"seq", "gram", "--quilt", path});
    CHECK(g.status == 0);
    std::remove(path.c_str());
}

TEST_CASE("interp certify and solve on a small quilt") {
    std::string path = "cli_test_quilt3.json";
    REQUIRE(run_cli({"quilt", "gen", "--eps", "1", "--out", path}).status == 0);
    auto cert = run_cli({"interp", "certify", "--quilt", path, "--p", "2"});
    CHECK(cert.status == 0);

    std::string tpath = "cli_test_targets.json";
    {
        std::ofstream f(tpath);
        f << "[[1.0, 0.0], [0.0, 1.0], [0.5, 0.5], [-1.0, 0.0]]";
    }
    auto solve = run_cli({"interp", "solve", "--quilt", path, "--targets", tpath, "--p", "2"});
    CHECK(solve.status == 0);
    CHECK(solve.out.find("residual") != std::string::npos);
    std::remove(path.c_str());
    std::remove(tpath.c_str());
}

TEST_CASE("assemble csv format") {
    auto r = run_cli({"assemble", "--blocks", "1", "--format", "csv", "--targets", "2",
                      "--grid", "32"});
    CHECK(r.status == 0);
    CHECK(r.out.rfind("block,eps,scale,points", 0) == 0);
}

TEST_CASE("kernel probe emits value and error estimate") {
    auto r = run_cli({"kernel", "probe", "--t", "1", "--grid", "32"});
    CHECK(r.status == 0);
    CHECK(r.out.find("error_estimate") != std::string::npos);
}
