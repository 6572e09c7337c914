// End-to-end tests for the command-line tool. The test binary receives the
// tool's path as its first argument and shells out to it.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string g_cli;
const std::string kDir = "/tmp/ifsx_cli_test";

int run(const std::string& args) {
    std::string cmd = g_cli + " " + args + " >" + kDir + "/stdout.txt 2>" + kDir + "/stderr.txt";
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    REQUIRE(out.good());
}

std::string captured_stdout() { return slurp(kDir + "/stdout.txt"); }

const char* kCantorConfig = R"({
  "dim": 1,
  "maps": [
    {"type": "affine", "a": 0.3333333333333333, "b": 0.0},
    {"type": "affine", "a": 0.3333333333333333, "b": 0.6666666666666666}
  ]
})";

const char* kWeakConfig = R"({
  "dim": 1,
  "maps": [{"type": "logistic"}, {"type": "constant", "c": [0.5]}]
})";

}  // namespace

TEST_CASE("usage and help") {
    CHECK(run("--help") == 0);
    CHECK(run("") == 1);                  // a subcommand is required
    CHECK(run("frobnicate") == 1);        // unknown subcommand
    CHECK(run("attractor") == 1);         // missing required --config
}

TEST_CASE("attractor end to end, byte-deterministic") {
    spit(kDir + "/cantor.json", kCantorConfig);
    CHECK(run("attractor --config " + kDir + "/cantor.json --out " + kDir + "/a1.csv") == 0);
    CHECK(captured_stdout().find("converged=1") != std::string::npos);
    CHECK(run("attractor --config " + kDir + "/cantor.json --out " + kDir + "/a2.csv") == 0);
    CHECK(slurp(kDir + "/a1.csv") == slurp(kDir + "/a2.csv"));
    CHECK(slurp(kDir + "/a1.csv").find(',') == std::string::npos);  // 1-d rows
}

TEST_CASE("attractor error paths") {
    spit(kDir + "/bad.json", "{\"dim\": 1, \"maps\": [");
    CHECK(run("attractor --config " + kDir + "/bad.json") == 1);
    CHECK(run("attractor --config " + kDir + "/does_not_exist.json") == 1);
    // Weak system cannot converge in 10 iterations: computation failure.
    spit(kDir + "/weak.json", kWeakConfig);
    CHECK(run("attractor --config " + kDir + "/weak.json --max-iter 10 --out " + kDir +
              "/w.csv") == 2);
}

TEST_CASE("hausdorff end to end") {
    spit(kDir + "/pa.csv", "0\n1\n");
    spit(kDir + "/pb.csv", "0.4\n");
    CHECK(run("hausdorff " + kDir + "/pa.csv " + kDir + "/pb.csv") == 0);
    CHECK(captured_stdout().find("distance=0.5999999") != std::string::npos);
    CHECK(run("hausdorff " + kDir + "/pa.csv " + kDir + "/missing.csv") == 1);
    spit(kDir + "/bad.csv", "0.1,0.2\n0.3\n");  // inconsistent dimension
    CHECK(run("hausdorff " + kDir + "/pa.csv " + kDir + "/bad.csv") == 1);
}

TEST_CASE("approx end to end") {
    spit(kDir + "/weak.json", kWeakConfig);
    std::string base = "approx --config " + kDir + "/weak.json --k-schedule 1,4,16 "
                       "--tol 1e-5 --resolution 1e-3 --max-iter 200000";
    CHECK(run(base + " --target 0.05 --out " + kDir + "/study1.csv") == 0);
    CHECK(run(base + " --target 0.05 --out " + kDir + "/study2.csv") == 0);
    CHECK(slurp(kDir + "/study1.csv") == slurp(kDir + "/study2.csv"));
    CHECK(slurp(kDir + "/study1.csv").rfind("k,lipschitz_max,hausdorff\n", 0) == 0);
    // Unreachable target is a computation failure, not a usage error.
    CHECK(run(base + " --target 1e-12") == 2);
    CHECK(run("approx --config " + kDir + "/weak.json --k-schedule 4,oops") == 1);
}

TEST_CASE("witness end to end") {
    CHECK(run("witness --kind ladder --n 2 --out " + kDir + "/l1.json") == 0);
    CHECK(captured_stdout().find("audits=pass") != std::string::npos);
    CHECK(run("witness --kind ladder --n 2 --out " + kDir + "/l2.json") == 0);
    CHECK(slurp(kDir + "/l1.json") == slurp(kDir + "/l2.json"));
    CHECK(run("witness --kind prop-p --depth 3 --out " + kDir + "/p.json") == 0);
    CHECK(run("witness --kind intervals --depth 4 --out " + kDir + "/i.json") == 0);
    CHECK(run("witness --kind prop-p --depth 4") == 2);  // infeasible by design
    CHECK(run("witness --kind nonsense") == 1);
}

TEST_CASE("search end to end, byte-deterministic") {
    REQUIRE(run("witness --kind ladder --n 2 --out " + kDir + "/ladder.json") == 0);
    std::string base = "search " + kDir + "/ladder.json --trials 30 --seed 42";
    CHECK(run(base + " --out " + kDir + "/s1.json") == 0);
    CHECK(run(base + " --out " + kDir + "/s2.json") == 0);
    CHECK(slurp(kDir + "/s1.json") == slurp(kDir + "/s2.json"));
    CHECK(slurp(kDir + "/s1.json").find("\"violated\": false") != std::string::npos);
    CHECK(run("search " + kDir + "/missing.json") == 1);
    spit(kDir + "/notladder.json", "{\"kind\": \"other\"}");
    CHECK(run("search " + kDir + "/notladder.json --trials 1") == 1);
}

TEST_CASE("render end to end") {
    spit(kDir + "/pts.csv", "0.1\n0.9\n");
    CHECK(run("render " + kDir + "/pts.csv --out " + kDir + "/r1.svg") == 0);
    CHECK(run("render " + kDir + "/pts.csv --out " + kDir + "/r2.svg") == 0);
    CHECK(slurp(kDir + "/r1.svg") == slurp(kDir + "/r2.svg"));
    CHECK(slurp(kDir + "/r1.svg").rfind("<svg", 0) == 0);
    spit(kDir + "/pts3.csv", "0.1,0.2,0.3\n");
    CHECK(run("render " + kDir + "/pts3.csv") == 1);  // d > 2 unsupported
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: %s <cli-path> [doctest args]\n", argv[0]);
        return 1;
    }
    g_cli = argv[1];
    std::filesystem::create_directories(kDir);
    doctest::Context ctx;
    ctx.applyCommandLine(argc - 1, argv + 1);
    int rc = ctx.run();
    std::filesystem::remove_all(kDir);
    return rc;
}
