#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cobord/sweep.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    std::string output;
    int exit_code = -1;
};

RunResult run(const std::string& args, bool merge_stderr = false)
{
    std::string cmd = std::string(COBORD_CLI_PATH) + " " + args +
                      (merge_stderr ? " 2>&1" : " 2>/dev/null");
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        res.output.append(buf.data(), n);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string config(const std::string& name)
{
    return std::string(COBORD_CONFIG_DIR) + "/" + name;
}

void check_deterministic(const std::string& args)
{
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == a.exit_code);
    CHECK(a.output == b.output);
    CHECK(!a.output.empty());
}

}  // namespace

TEST_CASE("fgl expand prints the universal law")
{
    RunResult r = run("fgl expand --trunc 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("u*v") != std::string::npos);
    CHECK(r.output.find("-2*m1") != std::string::npos);
    check_deterministic("fgl expand --trunc 4");
}

TEST_CASE("fgl expand rejects trunc 0")
{
    RunResult r = run("fgl expand --trunc 0", true);
    CHECK(r.exit_code == 2);
}

TEST_CASE("fgl nsum and jdecompose")
{
    RunResult r = run("fgl nsum --mults 1,1 --trunc 2 --format rows");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "u2\t1\nu1\t1\nu1*u2\t-2*m1\n");

    RunResult z = run("fgl nsum --mults 0 --trunc 3");
    CHECK(z.exit_code == 0);
    CHECK(z.output.find("(zero)") != std::string::npos);

    RunResult j = run("fgl jdecompose --mults 1,1 --trunc 2 --format rows");
    CHECK(j.exit_code == 0);
    CHECK(j.output.find("J=10") != std::string::npos);
    CHECK(j.output.find("J=01") != std::string::npos);
    CHECK(j.output.find("J=11") != std::string::npos);

    // Zero first multiplicity: no part with j1 = 1 appears.
    RunResult v = run("fgl jdecompose --mults 0,1 --trunc 3");
    CHECK(v.exit_code == 0);
    CHECK(v.output.find("J=10") == std::string::npos);
    CHECK(v.output.find("J=11") == std::string::npos);
    CHECK(v.output.find("J=01") != std::string::npos);

    check_deterministic("fgl jdecompose --mults 2,1 --trunc 4");
    check_deterministic("fgl inverse --trunc 5");
}

TEST_CASE("divclass on the bundled frames")
{
    RunResult r = run("divclass --config " + config("two_lines.json") + " --divisor C");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("face {1}:") != std::string::npos);
    CHECK(r.output.find("face {2}") == std::string::npos);

    RunResult d = run("divclass --config " + config("two_lines.json") + " --divisor D");
    CHECK(d.exit_code == 0);
    CHECK(d.output.find("face {1,2}:") != std::string::npos);
    CHECK(d.output.find("-2*m1") != std::string::npos);

    RunResult two = run("divclass --config " + config("two_lines.json") + " --divisor twoE1");
    CHECK(two.exit_code == 0);
    CHECK(two.output.find("2") != std::string::npos);

    check_deterministic("divclass --config " + config("two_lines.json") + " --divisor D");
    check_deterministic("divclass --config " + config("three_planes.json") +
                        " --divisor C --seq Z");
}

TEST_CASE("divclass diagnostics")
{
    RunResult missing =
        run("divclass --config " + config("two_lines.json") + " --divisor nope", true);
    CHECK(missing.exit_code == 2);

    RunResult inadmissible = run("divclass --config " + config("three_planes.json") +
                                     " --divisor Z --seq C,C2",
                                 true);
    CHECK(inadmissible.exit_code == 2);
    CHECK(inadmissible.output.find("face") != std::string::npos);
    CHECK(inadmissible.output.find("prefix") != std::string::npos);
}

TEST_CASE("intersect subcommand")
{
    RunResult r = run("intersect --config " + config("two_lines.json") +
                      " -C C -D C --class unit");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("face {1}:") != std::string::npos);

    // Global pseudo-divisor: same table as the chern route.
    RunResult g = run("intersect --config " + config("two_lines.json") +
                      " -C OE1 -D OE1 --class unit");
    CHECK(g.exit_code == 0);
    CHECK(g.output == r.output);

    RunResult bad = run("intersect --config " + config("two_lines.json") +
                            " -C D -D C --class unit",
                        true);
    CHECK(bad.exit_code == 2);  // D not supported in C

    check_deterministic("intersect --config " + config("three_planes.json") +
                        " -C C -D D --class 3");
}

TEST_CASE("verify axioms and config scopes")
{
    RunResult ax = run("verify axioms --trunc 4");
    CHECK(ax.exit_code == 0);
    CHECK(ax.output.find("identity=fgl_associativity") != std::string::npos);
    CHECK(ax.output.find("status=pass") != std::string::npos);
    check_deterministic("verify axioms --trunc 4");

    for (const char* name : {"two_lines.json", "three_planes.json", "disjoint_pair.json"}) {
        RunResult v = run("verify " + config(name));
        CHECK(v.exit_code == 0);
        CHECK(v.output.find("verification passed") != std::string::npos);
        check_deterministic("verify " + config(name));
    }
}

TEST_CASE("corrupted config file gives a parse diagnostic and exit 2")
{
    std::string path = "/tmp/cobord_bad_config.json";
    {
        std::ofstream out(path);
        out << "{ \"dimension\": 2, \"components\": [\"E1\"], \"faces\": [[1, 7]] }";
    }
    RunResult r = run("verify " + path, true);
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("error") != std::string::npos);

    {
        std::ofstream out(path);
        out << "this is not json";
    }
    RunResult r2 = run("divclass --config " + path + " --divisor D", true);
    CHECK(r2.exit_code == 2);
}

TEST_CASE("parallel and serial sweeps produce identical reports")
{
    cobord::SweepOptions serial;
    serial.max_m = 2;
    serial.max_d = 2;
    serial.jobs = 1;
    cobord::SweepOptions parallel = serial;
    parallel.jobs = 4;

    auto a = cobord::identity_sweep(serial);
    auto b = cobord::identity_sweep(parallel);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(a[i].str() == b[i].str());

    auto ca = cobord::contract_sweep(serial);
    auto cb = cobord::contract_sweep(parallel);
    REQUIRE(ca.size() == cb.size());
    for (std::size_t i = 0; i < ca.size(); ++i)
        CHECK(ca[i].str() == cb[i].str());
}
