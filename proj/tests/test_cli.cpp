#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>

#include <json.hpp>

#include "orthoconn/cli.hpp"

using nlohmann::json;
using orthoconn::cli::run;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

/// Runs the installed binary through the shell; returns stdout and exit status.
Outcome spawn(const std::string& args) {
    const std::string cmd = std::string(ORTHOCONN_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (const std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out, {}};
}

}  // namespace

TEST_CASE("poly command") {
    const auto r = call({"poly", "--family", "hermite", "--n", "3", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out) == json::parse(R"(["0/1","-12/1","0/1","8/1"])"));
    CHECK(r.err.empty());
    const auto csv = call({"poly", "--family", "laguerre", "--n", "1", "--format", "csv"});
    CHECK(csv.out == "degree,coefficient\n0,1/1\n1,-1/1\n");
    const auto jac = call({"poly", "--family", "shifted-jacobi", "--n", "1", "--alpha", "0", "--beta", "0"});
    CHECK(json::parse(jac.out) == json::parse(R"(["-1/1","2/1"])"));
    CHECK(call({"poly", "--family", "hermite-1f1", "--n", "3"}).out == call({"poly", "--family", "hermite", "--n", "3"}).out);
}

TEST_CASE("connect command") {
    const auto r = call({"connect", "--source", "hermite", "--target", "laguerre", "--n", "2", "--method", "both"});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["agree"] == true);
    CHECK(j["closed"]["coefficients"] == json::parse(R"(["6/1","-16/1","8/1"])"));
    CHECK(j["oracle"]["coefficients"] == json::parse(R"(["6/1","-16/1","8/1"])"));
    CHECK(j["closed"]["provenance"] == "Thm3.2");
    CHECK(j["oracle"]["provenance"] == "Oracle");

    const auto csv = call({"connect", "--source", "laguerre", "--target", "hermite", "--n", "1", "--format", "csv"});
    CHECK(csv.out == "n,k,coefficient,provenance\n1,0,1/1,Thm3.1\n1,1,-1/2,Thm3.1\n");

    const auto oracle_only = call({"connect", "--source", "laguerre", "--target", "shifted-jacobi", "--n", "2",
                                   "--method", "oracle"});
    CHECK(oracle_only.code == 0);
    CHECK(json::parse(oracle_only.out)["provenance"] == "Oracle");
}

TEST_CASE("connect reports closed/oracle disagreement with exit 1") {
    const auto r = call({"connect", "--source", "hermite", "--target", "jacobi-1mx", "--n", "2", "--method", "both"});
    CHECK(r.code == 1);
    const json j = json::parse(r.out);
    CHECK(j["agree"] == false);
    CHECK(j["oracle"]["coefficients"][0] == "10/3");
}

TEST_CASE("verify command") {
    const auto r = call({"verify", "--theorem", "3.3", "--n-max", "0", "--alpha", "0", "--beta", "0"});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["verdict"] == "pass");
    CHECK(j["theorem"] == "3.3");
    CHECK(j["method"] == "both");
    CHECK(j["entries"].size() == 1);

    const auto fail = call({"verify", "--theorem", "3.3", "--n-max", "3"});
    CHECK(fail.code == 1);
    CHECK(json::parse(fail.out)["verdict"] == "fail");

    CHECK(call({"verify", "--theorem", "3.1", "--n-max", "6"}).code == 0);
    CHECK(call({"verify", "--theorem", "3.3c", "--n-max", "4"}).code == 0);
    const auto csv = call({"verify", "--theorem", "3.4", "--n-max", "1", "--alpha", "1/2", "--beta", "1/2",
                           "--format", "csv"});
    CHECK(csv.out == "n,alpha,beta,match,first_mismatch,error\n0,1/2,1/2,true,,\n1,1/2,1/2,true,,\n");
}

TEST_CASE("verify lemma sweeps") {
    for (const char* lemma : {"2.1", "2.2", "2.3"}) {
        const auto r = call({"verify", "--theorem", lemma, "--seed", "5", "--cases", "10"});
        CHECK(r.code == 0);
        const json j = json::parse(r.out);
        CHECK(j["verdict"] == "pass");
        CHECK(j["params"]["seed"] == 5);
    }
}

TEST_CASE("table command") {
    const auto r = call({"table", "--source", "laguerre", "--target", "hermite", "--n-max", "2", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "n,k,coefficient,provenance\n"
          "0,0,1/1,Thm3.1\n"
          "1,0,1/1,Thm3.1\n1,1,-1/2,Thm3.1\n"
          "2,0,5/4,Thm3.1\n2,1,-1/1,Thm3.1\n2,2,1/8,Thm3.1\n");
    const auto j = json::parse(call({"table", "--source", "hermite", "--target", "laguerre", "--n-max", "1"}).out);
    CHECK(j.size() == 3);
    CHECK(j[2] == json{{"n", 1}, {"k", 1}, {"coefficient", "-2/1"}, {"provenance", "Thm3.2"}});
    CHECK(call({"table", "--source", "hermite", "--target", "jacobi-1mx", "--n-max", "3", "--method", "both"}).code == 1);
}

TEST_CASE("invalid input exits 2 with a diagnostic on stderr only") {
    const std::vector<std::vector<std::string>> bad{
        {},
        {"poly"},
        {"poly", "--family", "bessel", "--n", "2"},
        {"poly", "--family", "hermite", "--n", "-1"},
        {"poly", "--family", "shifted-jacobi", "--n", "2", "--beta", "-2"},
        {"poly", "--family", "hermite", "--n", "2", "--format", "xml"},
        {"connect", "--source", "laguerre", "--target", "shifted-jacobi", "--n", "2"},
        {"connect", "--source", "hermite", "--target", "laguerre", "--n", "2", "--alpha", "1/0"},
        {"verify", "--theorem", "9.9"},
        {"frobnicate"},
    };
    for (const auto& args : bad) {
        const auto r = call(args);
        CHECK(r.code == 2);
        CHECK(r.out.empty());
        CHECK_FALSE(r.err.empty());
        CHECK(r.err.find('\n') == r.err.size() - 1);
    }
}

TEST_CASE("help goes to stdout with exit 0") {
    const auto r = call({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("connect") != std::string::npos);
}

TEST_CASE("binary: determinism and exit codes") {
    const std::vector<std::string> commands{
        "poly --family hermite --n 12",
        "connect --source shifted-jacobi --target hermite --n 6 --alpha 1/2 --beta 1/3 --method both",
        "table --source hermite --target laguerre --n-max 6 --format csv",
        "verify --theorem 2.2 --seed 42 --cases 30",
        "verify --theorem 3.4 --n-max 4",
    };
    for (const auto& c : commands) {
        const auto first = spawn(c);
        const auto second = spawn(c);
        CHECK(first.code == 0);
        CHECK(first.out == second.out);
        CHECK_FALSE(first.out.empty());
    }
    CHECK(spawn("verify --theorem 3.3 --n-max 2").code == 1);
    CHECK(spawn("poly --family nope --n 1").code == 2);
    CHECK(spawn("verify --theorem 2.3 --seed 1 --cases 20").out != spawn("verify --theorem 2.3 --seed 2 --cases 20").out);
}
