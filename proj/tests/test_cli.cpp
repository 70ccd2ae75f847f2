#include "resq/cli.hpp"

#include <nlohmann/json.hpp>

#include <doctest.h>

#include <sstream>

using namespace resq;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("resultant subcommand") {
    const Run r = run({"resultant", "x^6+1", "(x+1)^6+1"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("175760") != std::string::npos);
    CHECK(r.err.empty());

    const Run single = run({"--format", "json", "resultant", "x-1", "x", "--engine", "euclid"});
    CHECK(single.code == kExitOk);
    const auto doc = nlohmann::json::parse(single.out);
    CHECK(doc["command"] == "resultant");
    CHECK(doc.contains("version"));
    CHECK(doc.contains("inputs"));
    CHECK(single.out.find("\"1\"") != std::string::npos);
}

TEST_CASE("negative leading coefficients are accepted as positionals") {
    const Run r = run({"resultant", "-x+1", "x"});
    CHECK(r.code == kExitOk);
    CHECK(r.err.empty());
}

TEST_CASE("analyze subcommand json") {
    const Run r = run({"--format", "json", "analyze", "x^6+1", "(x+1)^6+1", "--prime", "13"});
    REQUIRE(r.code == kExitOk);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["command"] == "analyze");
    const auto& res = doc["results"];
    CHECK(res["common_roots"] == nlohmann::json::array({5, 6, 7}));
    CHECK(res["rank_p"] == 3);
    CHECK(res["v_q"] == 3);
    CHECK(res["bound_theorem1"] == true);
    CHECK(res.contains("remainder_matrix"));

    const Run again = run({"--format", "json", "analyze", "x^6+1", "(x+1)^6+1", "--prime", "13"});
    CHECK(again.out == r.out);
}

TEST_CASE("input errors exit with 2") {
    CHECK(run({"analyze", "13*x^2+26", "x", "--prime", "13"}).code == kExitInputError);
    CHECK(run({"analyze", "x", "x+1", "--prime", "8"}).code == kExitInputError);
    const Run bad = run({"resultant", "3x", "x"});
    CHECK(bad.code == kExitInputError);
    CHECK(bad.err.find("error:") != std::string::npos);
    CHECK(run({"resultant", "x"}).code == kExitInputError);
    CHECK(run({"resultant", "x", "x", "--engine", "bogus"}).code == kExitInputError);
    CHECK(run({"bogus"}).code == kExitInputError);
    CHECK(run({"lucas", "--p", "1", "--q-param", "-1", "--prime", "4"}).code == kExitInputError);
    CHECK(run({"survey", "lucas", "--prime-max", "1000000"}).code == kExitInputError);
}

TEST_CASE("lucas subcommand") {
    const Run r = run({"--format", "json", "lucas", "--p", "1", "--q-param", "-1", "--prime", "11"});
    REQUIRE(r.code == kExitOk);
    CHECK(r.out.find("eq12") != std::string::npos);
    CHECK(r.out.find("eq13") != std::string::npos);
    const Run shifted = run({"lucas", "--p", "1", "--q-param", "-1", "--prime", "11", "--k", "1"});
    CHECK(shifted.code == kExitOk);
    CHECK(shifted.out.find("eq15") != std::string::npos);
    const Run inert = run({"--strict", "lucas", "--p", "1", "--q-param", "-1", "--prime", "7"});
    CHECK(inert.code == kExitOk);
}

TEST_CASE("survey subcommand") {
    const Run r = run({"--format", "json", "survey", "pell-lucas", "--prime-max", "50", "--no-shifts"});
    REQUIRE(r.code == kExitOk);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["command"] == "survey");
}

TEST_CASE("selftest subcommand") {
    const Run r = run({"selftest", "--cases", "5"});
    CHECK(r.code == kExitOk);
    CHECK(r.err.empty());
}

TEST_CASE("version flag") {
    const Run r = run({"--version"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("resq") != std::string::npos);
}
