#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

std::string cli_path() {
    const char* env = std::getenv("ORIGAMIKZ_CLI");
    return env ? env : "./tools/origamikz";
}

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " 2>&1";
    std::array<char, 4096> buf;
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("analyze a family") {
    RunResult r = run("analyze --family OPrime 3 5 --analyze stratum --analyze reduced");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"genus\": 3") != std::string::npos);
    CHECK(r.out.find("\"reduced\": true") != std::string::npos);
}

TEST_CASE("analyze veech of E5") {
    RunResult r = run("analyze --family E5 --analyze veech");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"index\": 10") != std::string::npos);
}

TEST_CASE("analyze inline permutations and text format") {
    RunResult r = run("analyze --perm \"h=(1,2);v=(1,3)\" --analyze stratum --format text");
    CHECK(r.code == 0);
    CHECK(r.out.find("genus") != std::string::npos);
}

TEST_CASE("malformed input exits 2") {
    RunResult r = run("analyze --perm \"h=(1,2;v=(1,3)\"");
    CHECK(r.code == 2);
    RunResult r2 = run("analyze --perm \"h=(1,2)(2,3);v=(1,3)\"");
    CHECK(r2.code == 2);
    RunResult r3 = run("analyze");
    CHECK(r3.code == 2);
}

TEST_CASE("budget exceeded exits 3") {
    RunResult r = run("analyze --family OPrime 3 5 --analyze veech --budget-orbit 3");
    // partial report with an error marker, not a failure
    CHECK(r.code == 0);
    CHECK(r.out.find("budget exceeded") != std::string::npos);
}

TEST_CASE("certify pinned family and re-check the certificate") {
    std::string tmp = "/tmp/origamikz_test_cert.json";
    RunResult r = run("certify --family Stairs 4 0 --out " + tmp);
    CHECK(r.code == 0);
    CHECK(r.out.find("\"sv\": true") != std::string::npos);
    CHECK(r.out.find("\"dfh\": true") != std::string::npos);

    RunResult c = run("check-cert " + tmp);
    CHECK(c.code == 0);
    CHECK(c.out.find("\"valid\": true") != std::string::npos);
    std::remove(tmp.c_str());
}

TEST_CASE("certify with explicit directions and a searched word") {
    RunResult r = run("certify --family OPrime 3 5 --dirs 1,1 --dirs 1,-1 --dirs 1,3 "
                      "--density none");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"sv\": true") != std::string::npos);
    CHECK(r.out.find("\"word_from_search\": true") != std::string::npos);
}

TEST_CASE("certify not dense exits 1") {
    RunResult r = run("certify --family Genus4H6 --density dfh");
    CHECK(r.code == 1);
}

TEST_CASE("table family_charpolys") {
    RunResult r = run("table family_charpolys --range 1 2");
    CHECK(r.code == 0);
    CHECK(r.out.find("OPrime,1,-35,248,-35,248,yes") != std::string::npos);
    CHECK(r.out.find("P,2,") != std::string::npos);
}

TEST_CASE("table h2 small range") {
    RunResult r = run("table h2_indices --range 4 6");
    CHECK(r.code == 0);
    CHECK(r.out.find("4,single,2,3,3,3,yes") != std::string::npos);
    CHECK(r.out.find("5,A,2,4,1,1,yes") != std::string::npos);
    CHECK(r.out.find("5,B,3,3,3,3,yes") != std::string::npos);
}

TEST_CASE("emit dot") {
    std::string tmp = "/tmp/origamikz_test_graph.dot";
    RunResult r = run("analyze --family Genus4H6 --analyze veech --emit-dot " + tmp);
    CHECK(r.code == 0);
    std::ifstream is(tmp);
    REQUIRE(is.good());
    std::string first;
    std::getline(is, first);
    CHECK(first.find("digraph") != std::string::npos);
    std::remove(tmp.c_str());
}
