// End-to-end tests that drive the installed CLI binary through a shell.
// COXPOLY_BIN is injected by the build as the absolute path of the tool.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
    int status = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(COXPOLY_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof(buf), pipe)) r.output.append(buf, got);
    const int rc = pclose(pipe);
    if (WIFEXITED(rc)) r.status = WEXITSTATUS(rc);
    return r;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    REQUIRE(out.good());
    out << content;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("coxeter subcommand prints the polynomial", "[cli]") {
    const RunResult r = run_cli("coxeter --linear 2");
    CHECK(r.status == 0);
    CHECK(r.output == "poly: [1, 1, 1]\n");
}

TEST_CASE("coxeter subcommand can print both matrices", "[cli]") {
    const RunResult r = run_cli("coxeter --tree 1,1,1 --cartan --matrix");
    CHECK(r.status == 0);
    CHECK(r.output ==
          "cartan: [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [1, 1, 1, 1]]\n"
          "coxeter: [[0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, 1], [-1, -1, -1, -1]]\n"
          "poly: [1, 1, 0, 1, 1]\n");
}

TEST_CASE("classify reports canonical algebras with representation type", "[cli]") {
    const RunResult r = run_cli("classify --canonical 2,3,6");
    CHECK(r.status == 0);
    CHECK(r.output == "canonical t=3 (condition i), tubular, delta=0\n");
}

TEST_CASE("classify reports tree type algebras", "[cli]") {
    const RunResult r = run_cli("classify --tree 1,1,1");
    CHECK(r.status == 0);
    CHECK(r.output == "tree type (tr = -1, conditions i-iii fail)\n");
}

TEST_CASE("classify reads a quiver from JSON", "[cli]") {
    write_file("cli_kronecker.json", R"({"n": 2, "arrows": [[1, 2], [1, 2]]})");
    const RunResult r = run_cli("classify --quiver cli_kronecker.json");
    CHECK(r.status == 0);
    CHECK(r.output == "non-tree hereditary (tr = 2)\n");
}

TEST_CASE("cyclic quivers are a domain error", "[cli]") {
    write_file("cli_cyclic.json", R"({"n": 2, "arrows": [[1, 2], [2, 1]]})");
    const RunResult r = run_cli("coxeter --quiver cli_cyclic.json");
    CHECK(r.status == 3);
    CHECK(contains(r.output, "error: cyclic_quiver"));
}

TEST_CASE("malformed JSON is a usage error", "[cli]") {
    write_file("cli_bad.json", "{ this is not json");
    const RunResult r = run_cli("coxeter --quiver cli_bad.json");
    CHECK(r.status == 2);
    CHECK(contains(r.output, "error: json_format"));
}

TEST_CASE("usage errors exit with code 2", "[cli]") {
    CHECK(run_cli("coxeter --bogus-flag").status == 2);
    CHECK(run_cli("coxeter").status == 2);                      // no input selected
    CHECK(run_cli("coxeter --linear 2 --tree 1,1,1").status == 2);  // mutually exclusive
    CHECK(run_cli("verify --suite unknown").status == 2);       // rejected by IsMember
}

TEST_CASE("verify subcommand runs a suite", "[cli]") {
    const RunResult r = run_cli("verify --suite waring --max-size 4");
    CHECK(r.status == 0);
    CHECK(contains(r.output, "suite waring:"));
    CHECK(contains(r.output, " 0 failed"));
}

TEST_CASE("tables subcommand emits CSV", "[cli]") {
    const RunResult r = run_cli("tables --max-size 5");
    CHECK(r.status == 0);
    CHECK(r.output.rfind("n,kind,params,coefficients\n", 0) == 0);
    CHECK(contains(r.output, "1,tree,\"A1\",\"[1, 1]\"\n"));
    CHECK(contains(r.output, "5,canonical,\"C(2,2,2)\","));
}

TEST_CASE("help exits cleanly", "[cli]") {
    const RunResult r = run_cli("--help");
    CHECK(r.status == 0);
    CHECK(contains(r.output, "coxeter"));
    CHECK(contains(r.output, "classify"));
}
