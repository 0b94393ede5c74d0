#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(QHX_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path write_temp(const std::string& name, const std::string& content) {
    fs::path dir = fs::temp_directory_path() / "qhx_cli_test";
    fs::create_directories(dir);
    fs::path file = dir / name;
    std::ofstream(file) << content;
    return file;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("verify-tables text report") {
    auto r = run_cli("verify-tables");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "table x (differential): 15/15"));
    CHECK(contains(r.out, "table g (differential): 13/15"));
    CHECK(contains(r.out, "table xhat (matrix): 15/15"));
    CHECK(contains(r.out, "table ghat (matrix): 12/15"));
    CHECK(contains(r.out, "internal invariants: ok"));
}

TEST_CASE("verify-tables json output is byte-identical across runs") {
    auto first = run_cli("verify-tables --format json");
    auto second = run_cli("verify-tables --format json");
    CHECK(first.exit_code == 0);
    CHECK(second.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(contains(first.out, "\"catalog\": \"x\""));
    CHECK(contains(first.out, "\"matches\": 15"));
}

TEST_CASE("classify") {
    auto identity = write_temp(
        "identity.json",
        R"({"rows":[[[1,0],[0,0],[0,0]],[[0,0],[1,0],[0,0]],[[0,0],[0,0],[1,0]]]})");
    auto r = run_cli("classify " + identity.string());
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "Moebius"));
    CHECK(contains(r.out, "QHT"));
    CHECK(contains(r.out, "Unimodular"));

    auto moebius = write_temp(
        "moebius.json",
        R"({"rows":[[[2,0],[3,1],[0,0]],[[0,-1],[5,0],[0,0]],[[0,0],[0,0],[1,0]]]})");
    auto rm = run_cli("classify " + moebius.string());
    CHECK(rm.exit_code == 0);
    CHECK(contains(rm.out, "Moebius"));
    CHECK_FALSE(contains(rm.out, "QHT"));

    auto malformed = write_temp("garbage.json", "{not json!");
    CHECK(run_cli("classify " + malformed.string()).exit_code == 1);

    CHECK(run_cli("classify /does/not/exist.json").exit_code == 1);

    auto bad_row = write_temp(
        "badrow.json",
        R"({"rows":[[[1,0],[0,0],[0,0]],[[0,0],[1,0],[0,0]],[[7,0],[0,0],[1,0]]]})");
    CHECK(run_cli("classify " + bad_row.string()).exit_code == 3);
}

TEST_CASE("apply") {
    auto t = write_temp("t.json",
                        R"({"u":{"x0":"2","x1":"0","x2":"0","x3":"0"},)"
                        R"("v":{"x0":"1","x1":"1","x2":"0","x3":"0"}})");
    auto r = run_cli("apply " + t.string() + R"( --point '{"x0":0,"x1":0,"x2":0,"x3":0}')");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "1 + i"));
    CHECK(contains(r.out, "FiniteAndInfinity"));
    CHECK(contains(r.out, "-1 - i"));

    auto ident = write_temp("ident.json",
                            R"({"u":{"x0":1,"x1":0,"x2":0,"x3":0},)"
                            R"("v":{"x0":0,"x1":0,"x2":0,"x3":0}})");
    auto ri = run_cli("apply " + ident.string() + R"( --point '{"x0":1,"x1":0,"x2":0,"x3":1}')");
    CHECK(ri.exit_code == 0);
    CHECK(contains(ri.out, "1 + k"));
    CHECK(contains(ri.out, "AllPoints"));

    auto shift = write_temp("shift.json",
                            R"({"u":{"x0":1,"x1":0,"x2":0,"x3":0},)"
                            R"("v":{"x0":0,"x1":0,"x2":1,"x3":0}})");
    auto rs = run_cli("apply " + shift.string() + R"( --point '{"x0":0,"x1":0,"x2":0,"x3":0}')");
    CHECK(rs.exit_code == 0);
    CHECK(contains(rs.out, "InfinityOnly"));

    auto constant = write_temp("const.json",
                               R"({"u":{"x0":0,"x1":0,"x2":0,"x3":0},)"
                               R"("v":{"x0":5,"x1":0,"x2":0,"x3":0}})");
    auto rc = run_cli("apply " + constant.string() + R"( --point '{"x0":1,"x1":2,"x2":0,"x3":0}')");
    CHECK(rc.exit_code == 0);
    CHECK(contains(rc.out, "warning"));
    CHECK(contains(rc.out, "image: 5"));

    CHECK(run_cli("apply " + t.string() + " --point not-json").exit_code == 1);

    auto j1 = run_cli("apply " + t.string() +
                      R"( --format json --point '{"x0":0,"x1":0,"x2":0,"x3":0}')");
    auto j2 = run_cli("apply " + t.string() +
                      R"( --format json --point '{"x0":0,"x1":0,"x2":0,"x3":0}')");
    CHECK(j1.exit_code == 0);
    CHECK(contains(j1.out, "\"image\""));
    CHECK(contains(j1.out, "\"FiniteAndInfinity\""));
    CHECK(j1.out == j2.out);
}

TEST_CASE("holo-check") {
    auto left = run_cli("holo-check \"q*i + j\"");
    CHECK(left.exit_code == 0);
    CHECK(contains(left.out, "LeftHolomorphic"));

    auto conj = run_cli("holo-check \"qbar*i\"");
    CHECK(conj.exit_code == 0);
    CHECK(contains(conj.out, "ConjugateLeftHolomorphic"));

    auto neither = run_cli("holo-check \"q*q\"");
    CHECK(neither.exit_code == 0);
    CHECK(contains(neither.out, "Neither"));

    CHECK(run_cli("holo-check \"q*%\"").exit_code == 1);

    // deterministic given the seed
    auto a = run_cli("holo-check \"q*q\" --format json --seed 7");
    auto b = run_cli("holo-check \"q*q\" --format json --seed 7");
    CHECK(a.out == b.out);
}

TEST_CASE("exp") {
    auto r = run_cli("exp --generator 2 --t 1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "0.36787944117144233"));

    auto rj = run_cli("exp --generator 1 --t 2 --format json");
    CHECK(rj.exit_code == 0);
    CHECK(contains(rj.out, "\"rows\""));
    CHECK(contains(rj.out, "\"t_z\""));

    CHECK(run_cli("exp --generator 9 --t 1").exit_code == 1);
    CHECK(run_cli("exp").exit_code == 1);
    CHECK(run_cli("no-such-command").exit_code == 1);
}
