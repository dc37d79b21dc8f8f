#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tame/cli.hpp"

using namespace tame;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> records(const std::string& text) {
    std::vector<nlohmann::json> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(nlohmann::json::parse(line));
    return out;
}

}  // namespace

TEST_CASE("compose and invert") {
    auto r = run({"compose", "(X1 + X2^2; X2; X3)", "(X1 - X2^2; X2; X3)"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "(X1; X2; X3)\n");
    r = run({"invert", "(X1 + X2^2; X2; X3)"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "(-X2^2 + X1; X2; X3)\n");
    r = run({"invert", "(X1^2; X2; X3)"});
    CHECK(r.code == kExitCheckFailed);
}

TEST_CASE("check reports automorphisms") {
    auto swap = run({"check", "(X2; X1; X3)"});
    CHECK(swap.code == kExitOk);
    CHECK(swap.out == "automorphism, inverse = (X2; X1; X3)\n");
    auto r = run({"check", "(X1 + X2^2; X2; X3)"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.rfind("automorphism, inverse = ", 0) == 0);
    r = run({"check", "(X1*X2; X2; X3)"});
    CHECK(r.code == kExitCheckFailed);
    CHECK(r.out.find("NotInvertible") != std::string::npos);
}

TEST_CASE("factor2") {
    auto r = run({"factor2", "(X1; X2 + X1^3)"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "T: (X1; X1^3 + X2)\n");
    r = run({"factor2", "(X1^2; X2)"});
    CHECK(r.code == kExitCheckFailed);
    CHECK(r.out.rfind("NotAutomorphism", 0) == 0);
    r = run({"factor2", "(X1; X2; X3)"});
    CHECK(r.code == kExitUsage);
}

TEST_CASE("psi prints amalgam letters") {
    auto r = run({"psi", "s(1,1,X2^2) s(2,3,X1)"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("H3: (X3; X2; X1)") != std::string::npos);
    CHECK(r.out.find("H1T:") != std::string::npos);
}

TEST_CASE("nagata report") {
    auto r = run({"nagata"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("H3: false") != std::string::npos);
    CHECK(r.out.find("H2: false") != std::string::npos);
    CHECK(r.out.find("Unknown") != std::string::npos);
}

TEST_CASE("structured output is one JSON object per line") {
    auto r = run({"--format", "structured", "verify-relations", "--samples", "6"});
    CHECK(r.code == kExitOk);
    const auto recs = records(r.out);
    REQUIRE(recs.size() == 4);
    CHECK(recs[0]["family"] == "R1");
    CHECK(recs[3]["check"] == "summary");
    CHECK(recs[3]["passed"] == 18);

    r = run({"nagata", "--format", "structured"});
    const auto n = records(r.out);
    REQUIRE(n.size() == 1);
    CHECK(n[0]["H3"] == false);
    CHECK(n[0]["H1T_conjugate"] == "Unknown");
}

TEST_CASE("structured factor2 and psi records are flat") {
    auto r = run({"--format", "structured", "factor2", "(X1 + X2^3; X2)"});
    CHECK(r.code == kExitOk);
    for (const auto& rec : records(r.out)) {
        for (const auto& [key, value] : rec.items()) CHECK_FALSE(value.is_structured());
    }
    r = run({"--format", "structured", "psi", "s(1,2,X2^2) s(3,1,X1)"});
    CHECK(r.code == kExitOk);
    const auto recs = records(r.out);
    REQUIRE_FALSE(recs.empty());
    CHECK(recs.back()["check"] == "psi");
    CHECK(recs.back()["consistent"] == true);
    for (const auto& rec : recs) {
        for (const auto& [key, value] : rec.items()) CHECK_FALSE(value.is_structured());
    }
}

TEST_CASE("the default relation run") {
    auto r = run({"verify-relations", "--samples", "1000", "--seed", "7"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("total: 3000/3000 pass") != std::string::npos);
    CHECK(r.out.rfind("verify-relations seed=7", 0) == 0);
}

TEST_CASE("verify-relations text summary and seed stability") {
    auto a = run({"verify-relations", "--samples", "9", "--seed", "3", "--max-deg", "3"});
    auto b = run({"verify-relations", "--samples", "9", "--seed", "3", "--max-deg", "3"});
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    CHECK(a.out.find("total: 27/27 pass") != std::string::npos);
}

TEST_CASE("replay-proof lists every chain and the negative control") {
    auto r = run({"replay-proof", "--samples", "2"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("R2 i=1 j=3") != std::string::npos);
    CHECK(r.out.find("negative control") != std::string::npos);
    CHECK(r.out.find("chains: 18/18 verified") != std::string::npos);
}

TEST_CASE("inputs from files") {
    const std::string path = "cli_test_input.txt";
    {
        std::ofstream f(path);
        f << "(X1 + X2^2; X2; X3)\n";
    }
    auto r = run({"invert", "@" + path});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "(-X2^2 + X1; X2; X3)\n");
    std::remove(path.c_str());
    CHECK(run({"invert", "@missing-file.txt"}).code == kExitUsage);
}

TEST_CASE("usage and parse errors exit with 2") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"compose"}).code == kExitUsage);
    CHECK(run({"--format", "xml", "nagata"}).code == kExitUsage);
    auto r = run({"invert", "(X1 + ; X2; X3)"});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("parse error") != std::string::npos);
    CHECK(run({"psi", "s(1,1,X1)"}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);
}
