#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "csf/cli.hpp"
#include "csf/serialize.hpp"

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = csf::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("build") {
    auto r = run_cli({"build", "12"});
    CHECK(r.code == 0);
    CHECK(r.out.find("n: 12") != std::string::npos);
    CHECK(r.out.find("circular_square_free: true") != std::string::npos);

    r = run_cli({"build", "10"});
    CHECK(r.code == 2);
    CHECK(r.err.find("10") != std::string::npos);

    r = run_cli({"build", "0"});
    CHECK(r.code == 3);

    r = run_cli({"build", "90", "--json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["n"] == 90);
    CHECK(j["level"] == true);
    CHECK(j["circular_square_free"] == true);
    CHECK(j["word"].get<std::string>().size() == 90);
    CHECK(j["recipe"]["type"] == "composite");
}

TEST_CASE("verify") {
    auto r = run_cli({"verify", "abcacb"});
    CHECK(r.code == 0);
    CHECK(r.out.find("level: true") != std::string::npos);

    r = run_cli({"verify", "abab"});
    CHECK(r.code == 1);
    CHECK(r.out.find("square: start 1, period 2") != std::string::npos);

    // circular square-free but not level (a appears 8 times, b only 4)
    r = run_cli({"verify", "abacabcacbacabacbc"});
    CHECK(r.code == 1);
    CHECK(r.out.find("circular_square_free: true") != std::string::npos);
    CHECK(r.out.find("level: false") != std::string::npos);

    r = run_cli({"verify", "ab1"});
    CHECK(r.code == 3);

    r = run_cli({"verify", "--shur", "33"});
    CHECK(r.code == 0);
    r = run_cli({"verify", "--shur", "11"});
    CHECK(r.code == 1);
    // circularly the 22 suffix meets the 33 prefix: forbidden 223
    r = run_cli({"verify", "--shur", "331313123231212122"});
    CHECK(r.code == 1);
    CHECK(r.out.find("forbidden_factor: 223") != std::string::npos);
}

TEST_CASE("encode and decode") {
    auto r = run_cli({"encode", "cbabca"});
    CHECK(r.code == 0);
    CHECK(r.out == "101101\n");

    r = run_cli({"decode", "101101"});
    CHECK(r.code == 0);
    CHECK(r.out == "abcbacab\n");

    r = run_cli({"decode", "--s", "33", "--truncate"});
    CHECK(r.code == 0);
    CHECK(r.out == "abacbabc\n");

    r = run_cli({"decode"});
    CHECK(r.code == 3);

    r = run_cli({"encode", "aab"});
    CHECK(r.code == 3);
}

TEST_CASE("count") {
    auto r = run_cli({"count", "6"});
    CHECK(r.code == 0);
    CHECK(r.out == "3\n");

    r = run_cli({"count", "12", "--json"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["count"] == 6);

    r = run_cli({"count", "99"});
    CHECK(r.code == 3);  // beyond the brute-force cap
}

TEST_CASE("searches") {
    auto r = run_cli({"search-short", "17"});
    CHECK(r.code == 2);
    r = run_cli({"search-short", "17", "--json"});
    CHECK(r.code == 2);
    CHECK(nlohmann::json::parse(r.out)["found"] == false);

    r = run_cli({"search-short", "18", "--workers", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("u: ") != std::string::npos);

    r = run_cli({"search-link", "54"});
    CHECK(r.code == 0);
    r = run_cli({"search-link", "16"});
    CHECK(r.code == 2);
}

TEST_CASE("table subcommands") {
    CHECK(run_cli({"table1"}).code == 0);
    CHECK(run_cli({"table2"}).code == 0);
    CHECK(run_cli({"table2", "--verify"}).code == 0);
    CHECK(run_cli({"table3"}).code == 0);

    // without the shipped files verification fails on coverage
    auto r = run_cli({"table2", "--data-dir", "/nonexistent"});
    CHECK(r.code == 1);
}

TEST_CASE("build output verifies") {
    for (const char* n : {"15", "90", "144"}) {
        auto built = run_cli({"build", n, "--json"});
        REQUIRE(built.code == 0);
        const auto word = nlohmann::json::parse(built.out)["word"].get<std::string>();
        CHECK(run_cli({"verify", word}).code == 0);
    }
}

TEST_CASE("nonexistence audit") {
    const auto r = run_cli({"nonexist"});
    CHECK(r.code == 0);
    CHECK(r.out.find("pass: true") != std::string::npos);
}

TEST_CASE("usage errors") {
    CHECK(run_cli({}).code == 3);
    CHECK(run_cli({"frobnicate"}).code == 3);
    CHECK(run_cli({"build"}).code == 3);
    CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("json round trips") {
    const auto cert = csf::build(90);
    const auto back = csf::certificate_from_json(csf::to_json(cert));
    CHECK(back.n == cert.n);
    CHECK(back.word == cert.word);
    CHECK(back.recipe.kind == cert.recipe.kind);
    CHECK(back.recipe.v == cert.recipe.v);
    CHECK(back.recipe.s == cert.recipe.s);
    CHECK(back.level == cert.level);
    CHECK(back.circular_square_free == cert.circular_square_free);

    const auto small = csf::build(8);
    const auto small_back = csf::certificate_from_json(csf::to_json(small));
    CHECK(small_back.word == small.word);
    CHECK(small_back.recipe.kind == small.recipe.kind);
    CHECK(small_back.recipe.u == small.recipe.u);

    const auto shur = csf::check_shur("11");
    const auto j = csf::to_json(shur);
    CHECK(j["pass"] == false);
    CHECK(j["forbidden_factor"]["factor"] == "11");

    const auto link = csf::check_link_conditions("331313123231212122");
    CHECK(csf::to_json(link)["pass"] == true);
}

}  // TEST_SUITE
