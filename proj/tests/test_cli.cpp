#include "cli_run.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>

using nlohmann::json;

namespace {

std::string temp_file(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / ("concyclic_cli_test_" + name);
    std::ofstream(path) << content;
    return path.string();
}

}  // namespace

TEST_CASE("circle --form") {
    auto r = run_cli("circle --form 1,0,1 --n-points 2");
    REQUIRE(r.exit_code == 0);
    auto j = json::parse(r.out);
    CHECK(j["prime"]["p"] == 73);
    CHECK(j["j"] == 3);
    CHECK(j["points"] == json::parse("[[0,-2],[0,2]]"));
    CHECK(j["verified"] == true);
}

TEST_CASE("circle --gram matches the Gram basis") {
    auto path = temp_file("hex.json", R"({"dim":2,"entries":[[2,1],[1,2]]})");
    auto r = run_cli("circle --gram " + path + " --n-points 3");
    REQUIRE(r.exit_code == 0);
    auto j = json::parse(r.out);
    CHECK(j["points"].size() == 3);
    CHECK(j["verified"] == true);
    CHECK(j["input"]["gram"] == json::parse("[[2,1],[1,2]]"));
}

TEST_CASE("circle writes an SVG") {
    auto svg = (std::filesystem::temp_directory_path() / "concyclic_cli_test.svg").string();
    std::filesystem::remove(svg);
    REQUIRE(run_cli("circle --form 1,1,1 --n-points 2 --svg " + svg).exit_code == 0);
    std::ifstream in(svg);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text.find("<svg") != std::string::npos);
}

TEST_CASE("sphere") {
    auto path = temp_file("z3.json", R"({"dim":3,"entries":[[1,0,0],[0,1,0],[0,0,1]]})");
    auto r = run_cli("sphere --gram " + path + " --n-points 2");
    REQUIRE(r.exit_code == 0);
    auto j = json::parse(r.out);
    CHECK(j["center"] == json::parse(R"(["3/4","0/1","1/16"])"));
    CHECK(j["radius2"] == "1169/256");
    CHECK(j["verified"] == true);
}

TEST_CASE("count-reps, split, prime-search") {
    auto c = run_cli("count-reps --n 3 --p 7 --k 4");
    REQUIRE(c.exit_code == 0);
    CHECK(json::parse(c.out) == json::parse(R"({"count": 10})"));

    auto s = run_cli("split --dk -7 --p 2");
    REQUIRE(s.exit_code == 0);
    CHECK(json::parse(s.out) == json::parse(R"({"type": "split"})"));

    auto p = run_cli("prime-search --n 12 --a 2");
    REQUIRE(p.exit_code == 0);
    auto j = json::parse(p.out);
    CHECK(j["p"] == 769);
    CHECK(j["x1"] == 1);
    CHECK(j["y1"] == 8);
}

TEST_CASE("check-main1") {
    auto pass = run_cli("check-main1 --n 3 --p 7 --kmax 5");
    CHECK(pass.exit_code == 0);
    CHECK(json::parse(pass.out)["counts"] == json::parse("[2,4,6,8,10,12]"));
    auto unmet = run_cli("check-main1 --n 3 --p 5 --kmax 3");
    CHECK(unmet.exit_code == 1);
    CHECK(json::parse(unmet.out)["status"] == "hypotheses not met");
}

TEST_CASE("exit codes for bad input and exhausted search") {
    CHECK(run_cli("circle --form 1,3,1 --n-points 2").exit_code == 1);
    CHECK(run_cli("circle --form 1,0 --n-points 2").exit_code == 1);
    CHECK(run_cli("circle --form x,0,1 --n-points 2").exit_code == 1);
    CHECK(run_cli("circle --form 1,0,1 --n-points 0").exit_code == 1);
    CHECK(run_cli("circle --n-points 2").exit_code == 1);
    CHECK(run_cli("split --dk -7 --p 9").exit_code == 1);
    CHECK(run_cli("sphere --gram /nonexistent/file.json --n-points 2").exit_code == 1);
    CHECK(run_cli("sphere --gram " + temp_file("bad.json", "{not json") + " --n-points 2").exit_code == 1);
    CHECK(run_cli("sphere --gram " + temp_file("indef.json", R"({"dim":2,"entries":[[1,2],[2,1]]})") +
                  " --n-points 2")
              .exit_code == 1);
    CHECK(run_cli("circle --form 1,0,1 --n-points 4 --prime-bound 72").exit_code == 2);
    CHECK(run_cli("prime-search --n 4 --a 1 --prime-bound 72").exit_code == 2);
    CHECK(run_cli("no-such-command").exit_code == 1);
}
