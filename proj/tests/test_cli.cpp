#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("fibercx_" + name)).string();
}

// Runs the CLI with the given argument string; captures stdout+stderr.
RunResult run(const std::string& args) {
    std::string tmp = temp_path("cli_out.txt");
    std::string cmd = std::string(FIBERCX_CLI_PATH) + " " + args + " > " + tmp + " 2>&1";
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.status = WEXITSTATUS(rc);
    std::ifstream f(tmp);
    std::stringstream buf;
    buf << f.rdbuf();
    r.out = buf.str();
    std::remove(tmp.c_str());
    return r;
}

std::string data(const std::string& name) {
    return std::string(FIBERCX_DATA_DIR) + "/" + name;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = temp_path(name);
    std::ofstream f(path);
    f << content;
    return path;
}

}  // namespace

TEST_CASE("catalog list") {
    RunResult r = run("--porcelain catalog list --codim 2 --refined");
    CHECK(r.status == 0);
    CHECK(r.out.find("count=160") != std::string::npos);

    r = run("--porcelain catalog list --codim 2 --refined --variant admissible");
    CHECK(r.out.find("count=154") != std::string::npos);
    CHECK(r.out.find("class=bII^d_o") == std::string::npos);

    r = run("catalog list --dim 2,1 --codim 1");
    CHECK(r.status == 0);
    CHECK(r.out.find("total: 9") != std::string::npos);
    CHECK(r.out.find("bI^1\n") == std::string::npos);
}

TEST_CASE("complex check and cohomology") {
    for (const char* v : {"full", "admissible", "morse"}) {
        RunResult r = run(std::string("complex check --variant ") + v);
        CHECK(r.status == 0);
    }
    RunResult r = run("--porcelain cohomology --variant admissible --degree 1");
    CHECK(r.status == 0);
    CHECK(r.out.find("dimension=3") != std::string::npos);
    r = run("--porcelain cohomology --variant full --degree 0");
    CHECK(r.out.find("generator=b0") != std::string::npos);
}

TEST_CASE("verify-paper") {
    RunResult r = run("verify-paper --formulae " + data("expected_formulae.txt") +
                      " --disk-trace " + data("disk.trace") + " --trials 50");
    INFO(r.out);
    CHECK(r.status == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("all claims verified") != std::string::npos);

    // a corrupted transcription must be caught and exit 1
    std::ifstream good(data("expected_formulae.txt"));
    std::stringstream buf;
    buf << good.rdbuf();
    std::string text = buf.str();
    std::string target = "coexist32_basis 4 = bII^c";
    auto pos = text.find(target);
    REQUIRE(pos != std::string::npos);
    text.replace(pos, target.size(), "coexist32_basis 4 = bII^a");
    std::string bad = write_temp("bad_formulae.txt", text);
    r = run("verify-paper --formulae " + bad + " --disk-trace " + data("disk.trace") +
            " --trials 5");
    CHECK(r.status == 1);
    CHECK(r.out.find("FAIL") != std::string::npos);
    std::remove(bad.c_str());
}

TEST_CASE("constraints derive") {
    RunResult r = run("--porcelain constraints derive --level basis");
    CHECK(r.status == 0);
    int lines = 0;
    std::istringstream is(r.out);
    std::string line;
    while (std::getline(is, line))
        if (line.rfind("constraint=", 0) == 0) ++lines;
    CHECK(lines == 7);

    r = run("constraints derive --variant morse --level refined");
    CHECK(r.status == 0);
    CHECK(r.out.find("even: bI^2 + bI^3 + bI^4 + bI^6 + bI^8") != std::string::npos);
}

TEST_CASE("coexist") {
    std::string ok = write_temp("counts_ok.txt",
                                "bII^{2,9} = 2\nbII^27 = 4\n");
    RunResult r = run("coexist " + ok + " --level coarse");
    CHECK(r.status == 0);
    CHECK(r.out.find("all parity laws satisfied") != std::string::npos);
    std::remove(ok.c_str());

    std::string odd = write_temp("counts_odd.txt", "bII^{2,9}_o = 1\n");
    r = run("coexist " + odd + " --level refined");
    CHECK(r.status == 1);
    CHECK(r.out.find("ODD") != std::string::npos);
    std::remove(odd.c_str());
}

TEST_CASE("morse subcommands") {
    RunResult r = run("morse validate " + data("disk.trace"));
    CHECK(r.status == 0);
    CHECK(r.out.find("valid (3 events)") != std::string::npos);

    r = run("--porcelain morse counts " + data("disk.trace"));
    CHECK(r.status == 0);
    CHECK(r.out.find("count.bI^2_e=1") != std::string::npos);
    CHECK(r.out.find("count.bI^6_e=1") != std::string::npos);
    CHECK(r.out.find("count.bI^7_e=1") != std::string::npos);

    r = run("--porcelain morse invariant " + data("disk.trace") + " --class alpha");
    CHECK(r.status == 0);
    CHECK(r.out.find("value=1") != std::string::npos);

    r = run("--porcelain morse invariant " + data("disk.trace") +
            " --class beta --variant full");
    CHECK(r.out.find("value=0") != std::string::npos);

    r = run("--porcelain morse invariant " + data("empty.trace") +
            " --class \"bI^6 + bI^7 + bI^8\" --variant full");
    CHECK(r.status == 0);
    CHECK(r.out.find("value=0") != std::string::npos);

    // an invalid trace is a verification failure, not a usage error
    std::string bad = write_temp("bad.trace",
                                 "target: line\n"
                                 "initial: circles=0 arcs=0\n"
                                 "event v=1 class=bI^2 reg_circles=0 reg_arcs=0 "
                                 "after=1,0\n");
    r = run("morse validate " + bad);
    CHECK(r.status == 1);
    r = run("morse counts " + bad);
    CHECK(r.status == 1);
    std::remove(bad.c_str());
}

TEST_CASE("usage and parse errors exit 2") {
    CHECK(run("").status == 2);
    CHECK(run("--bogus-flag catalog list").status == 2);
    CHECK(run("frobnicate").status == 2);
    CHECK(run("morse validate /nonexistent.trace").status == 2);
    CHECK(run("complex check --variant nonsense").status == 2);

    std::string garbage = write_temp("garbage.trace", "telemetry: on\n");
    CHECK(run("morse validate " + garbage).status == 2);
    std::remove(garbage.c_str());

    CHECK(run("--help").status == 0);
    CHECK(run("morse invariant " + data("disk.trace") + " --class bII^g").status == 2);
}
