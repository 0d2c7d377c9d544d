#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "qgw/suq2.hpp"
#include "qgw/parse.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(QGW_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

} // namespace

TEST_CASE("ktheory verb computes the quantum automorphism K-groups") {
    RunResult r = run("ktheory --boundary \"[[3,-3],[-3,3]]\"");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["K0"]["rank"] == 1);
    CHECK(j["K0"]["torsion"] == json::array({3}));
    CHECK(j["K1"]["rank"] == 1);
    CHECK(j["K1"]["torsion"] == json::array());
}

TEST_CASE("normalize verb emits sparse coefficient tables") {
    RunResult r = run("normalize \"as a\"");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    REQUIRE(j["terms"].size() == 2);
    CHECK(j["terms"][0]["word"] == json::array());
    CHECK(j["terms"][0]["coeff"]["num"] == json{{"0", "1"}});
    CHECK(j["terms"][1]["word"] == json::array({"g", "gs"}));
    CHECK(j["terms"][1]["coeff"]["num"] == json{{"0", "-1"}});
    CHECK(j["terms"][1]["coeff"]["den"] == json{{"0", "1"}});
}

TEST_CASE("haar verb") {
    RunResult r = run("haar \"g gs\"");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["num"] == "1");
    CHECK(j["den"] == "1+q^2");

    RunResult at_one = run("haar \"g gs\" --q 1");
    CHECK(json::parse(at_one.out)["value"] == "1/2");
}

TEST_CASE("output is byte-stable across runs") {
    for (const char* cmd : {"normalize \"a gs + q^2 g a\"", "corep --spin 1", "snf --matrix \"[[2,0],[0,3]]\""}) {
        RunResult a = run(cmd), b = run(cmd);
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
}

TEST_CASE("printed normal forms re-parse to the same value") {
    qgw::Suq2 ctx;
    RunResult r = run("normalize \"g a g a\" --format text");
    CHECK(r.exit_code == 0);
    std::string text = r.out.substr(0, r.out.find_last_not_of('\n') + 1);
    CHECK(qgw::parse_expression(text) ==
          ctx.normalize(qgw::parse_expression("g a g a")));
}

TEST_CASE("exit codes distinguish user errors") {
    CHECK(run("normalize \"nope\"").exit_code == 1);
    CHECK(run("ktheory --boundary \"[[1,2],[3]]\"").exit_code == 1);
    CHECK(run("pv --alpha0 \"[[1,0]]\"").exit_code == 1);
    CHECK(run("corep --spin 9").exit_code == 1); // beyond the configured bound
    json err = json::parse(run("normalize \"nope\"").out);
    CHECK(err["error"]["kind"] == "parse");
}

TEST_CASE("every documented verb runs within the configured bounds") {
    const std::string zoo = std::string(QGW_DATA_DIR) + "/zoo";
    for (const std::string& cmd : {
             std::string("normalize \"g*a\""),
             std::string("hopf-check --suq2 --degree 2"),
             std::string("hopf-check --hopf ") + zoo + "/z3.json",
             std::string("haar \"a as\""),
             std::string("corep --spin 1/2"),
             std::string("fuse 1 1/2"),
             std::string("podles project \"a + g gs\""),
             std::string("podles bundle 1 -1 --degree 3"),
             std::string("podles generators 1 --degree 3"),
             std::string("podles idempotent 1"),
             std::string("podles profile 0"),
             std::string("yd-check --degree 2"),
             std::string("double --hopf ") + zoo + "/z2.json",
             std::string("braid --hopf ") + zoo + "/z2_dual.json",
             std::string("snf --matrix \"[[4,6],[2,2]]\""),
             std::string("ktheory --boundary \"[[5,-5],[-5,5]]\""),
             std::string("pv --alpha0 \"[[1]]\" --alpha1 \"[]\""),
             std::string("qaut relations 1"),
             std::string("qaut derive 2"),
             std::string("qaut ideal-check 2 --degree 0"),
         }) {
        RunResult r = run(cmd);
        INFO(cmd, " -> ", r.out);
        CHECK(r.exit_code == 0);
        CHECK_FALSE(r.out.empty());
    }
}

TEST_CASE("configuration precedence: flag > environment > file > default") {
    RunResult def = run("yd-check");
    CHECK(json::parse(def.out)["degree"] == 3);

    RunResult with_env = [] {
        std::string cmd = std::string("QGW_DEGREE=2 ") + QGW_BIN + " yd-check 2>/dev/null";
        FILE* pipe = popen(cmd.c_str(), "r");
        std::string out;
        std::array<char, 4096> buf{};
        std::size_t n;
        while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
        int status = pclose(pipe);
        return RunResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
    }();
    CHECK(json::parse(with_env.out)["degree"] == 2);

    std::string conf = "/tmp/qgw_test.conf";
    std::ofstream(conf) << "# test config\ndegree = 1\n";
    RunResult with_file = run("yd-check --config " + conf);
    CHECK(json::parse(with_file.out)["degree"] == 1);
    RunResult flag_wins = run("yd-check --config " + conf + " --degree 2");
    CHECK(json::parse(flag_wins.out)["degree"] == 2);
}
