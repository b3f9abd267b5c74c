#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "nobeling/cli.hpp"
#include "nobeling/io.hpp"

using namespace nobeling;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "nobeling");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
    const fs::path dir = fs::temp_directory_path() / "nobeling_cli_tests";
    fs::create_directories(dir);
    const fs::path p = dir / name;
    std::ofstream(p, std::ios::binary) << content;
    return p.string();
}

}  // namespace

TEST_CASE("basis command") {
    const std::string diag = temp_file("diag.cube", "n 2\n00\n11\n");
    const Run r = run({"basis", "--input", diag, "--method", "both"});
    CHECK(r.code == 0);
    CHECK(r.out == "|S| = 2, |E(S)| = 2, method = both\n[]\n[0]\nALGORITHMS AGREE\n");
    const Run j = run({"basis", "--input", diag, "--format", "json"});
    CHECK(j.code == 0);
    const auto doc = io::parse_json(j.out);
    CHECK(doc["basis"].dump() == "[[],[0]]");
    CHECK(doc["algorithms_agree"] == true);

    const Run empty = run({"basis", "--input", temp_file("empty.cube", "n 3\n"), "--format", "json"});
    CHECK(empty.code == 0);
    CHECK(io::parse_json(empty.out)["basis"].dump() == "[]");

    const Run ordered = run({"basis", "--input", diag, "--order", "1 0", "--method", "recursive"});
    CHECK(ordered.code == 0);
    CHECK(ordered.out.find("[1]") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"basis"}).code == 2);
    CHECK(run({"basis", "--input", "/nonexistent/file.cube"}).code == 2);
    CHECK(run({"basis", "--input", temp_file("bad.cube", "n 2\n012\n")}).code == 2);
    CHECK(run({"basis", "--input", temp_file("diag2.cube", "n 2\n00\n11\n"), "--order", "0 0"}).code == 2);
    CHECK(run({"basis", "--input", temp_file("d.cube", "n 2\n00\n"), "--method", "magic"}).code == 2);
    const Run big = run({"basis", "--input", temp_file("big.cube", "n 25\n" + std::string(25, '0') + "\n"),
                         "--method", "greedy"});
    CHECK(big.code == 3);
    CHECK(run({"basis", "--input", temp_file("n5.cube", "n 5\n00000\n"), "--max-n", "4"}).code == 3);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify command") {
    const std::string full = temp_file("full3.cube", "n 3\n000\n001\n010\n011\n100\n101\n110\n111\n");
    const Run ok = run({"verify", "--input", full, "--format", "json", "--seed", "5"});
    CHECK(ok.code == 0);
    const auto doc = io::parse_json(ok.out);
    CHECK(doc["pass"] == true);
    CHECK(doc["seed"] == 5);
    const Run diag = run({"verify", "--input", temp_file("diag4.cube", "n 4\n0000\n1111\n")});
    CHECK(diag.code == 0);
    const Run bad = run({"verify", "--input", full, "--inject-fault"});
    CHECK(bad.code == 4);
    CHECK(bad.out.find("FAIL basis_property") != std::string::npos);
}

TEST_CASE("decompose command") {
    const std::string full = temp_file("full2.cube", "n 2\n00\n01\n10\n11\n");
    const std::string seven = temp_file("seven.json", R"({"00":"7","01":"7","10":"7","11":"7"})");
    const Run r = run({"decompose", "--input", full, "--function", seven, "--format", "json"});
    CHECK(r.code == 0);
    CHECK(io::parse_json(r.out)["coefficients"].dump() == R"({"[]":"7"})");
    const std::string partial = temp_file("partial.json", R"({"00":"7"})");
    CHECK(run({"decompose", "--input", full, "--function", partial}).code == 2);
}

TEST_CASE("embed command") {
    const std::string space =
        temp_file("space.json", R"({"elements":["a","b","c"],"family":[["a"],["b"]]})");
    const Run r = run({"embed", "--input", space});
    CHECK(r.code == 0);
    CHECK(r.out == "n 2\n00\n01\n10\n");
    const Run j = run({"embed", "--input", space, "--format", "json"});
    const auto doc = io::parse_json(j.out);
    CHECK(doc["map"]["a"] == "10");
    CHECK(doc["map"]["b"] == "01");
    CHECK(doc["map"]["c"] == "00");
    const std::string sys = temp_file(
        "sys.json",
        R"({"stages":[["0","1"],["00","01","10","11"]],"transitions":[{"00":"0","01":"0","10":"1","11":"1"}]})");
    const Run s = run({"embed", "--input", sys, "--format", "json"});
    CHECK(s.code == 0);
    CHECK(io::parse_json(s.out)["stages"][0]["pass"] == true);
    const std::string unsep =
        temp_file("unsep.json", R"({"elements":["a","b"],"family":[["a","b"]]})");
    CHECK(run({"embed", "--input", unsep}).code == 2);
}

TEST_CASE("gen output re-parses byte for byte") {
    const std::vector<std::vector<std::string>> cases = {
        {"diagonal", "2"},       {"full_cube", "3"},         {"cantor_truncation", "2"},
        {"padic", "3", "2"},     {"random_closed", "6", "0.4"}, {"random_points", "7", "20"}};
    for (const auto& c : cases) {
        std::vector<std::string> args{"gen"};
        args.insert(args.end(), c.begin(), c.end());
        args.insert(args.end(), {"--seed", "3"});
        const Run r = run(args);
        CHECK(r.code == 0);
        CHECK(io::write_cube(io::read_cube(r.out)) == r.out);
    }
    CHECK(run({"gen", "diagonal", "2"}).out == "n 2\n00\n11\n");
    CHECK(run({"gen", "torus"}).code == 2);
    const std::string out = (fs::temp_directory_path() / "nobeling_cli_tests" / "gen.cube").string();
    CHECK(run({"gen", "full_cube", "2", "--out", out}).code == 0);
    CHECK(io::read_file(out) == "n 2\n00\n01\n10\n11\n");
}

TEST_CASE("filtration command") {
    const Run r = run({"filtration", "--input", temp_file("f.cube", "n 2\n00\n11\n"), "--format", "json"});
    CHECK(r.code == 0);
    const auto doc = io::parse_json(r.out);
    REQUIRE(doc["stages"].size() == 3);
    CHECK(doc["stages"][2]["size"] == 2);
    CHECK(doc["terminal_matches"] == true);
}
