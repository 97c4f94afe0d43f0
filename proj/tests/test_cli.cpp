#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "boxkit/graph.hpp"
#include "boxkit/graph_io.hpp"

using namespace boxkit;
namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

const char* kCli = BOXKIT_CLI_PATH;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    fs::path tmp = fs::temp_directory_path() / "boxkit_cli_out.txt";
    std::string cmd = std::string(kCli) + " " + args + " > " + tmp.string() + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    std::ifstream in(tmp);
    std::ostringstream ss;
    ss << in.rdbuf();
    int code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return {code, ss.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path temp_file(const std::string& name) { return fs::temp_directory_path() / name; }

}  // namespace

TEST_CASE("gen kneser writes the same json as the library") {
    fs::path out = temp_file("cli_kneser.json");
    RunResult r = run_cli("gen kneser --k 2 --n 5 -o " + out.string());
    REQUIRE(r.exit_code == 0);
    CHECK(slurp(out) == write_graph_json(kneser_graph({2, 5})));
    Graph g = read_graph_json(slurp(out));
    CHECK(g.vertex_count() == 10);
    CHECK(g.edge_count() == 15);
}

TEST_CASE("two runs emit identical bytes") {
    RunResult a = run_cli("gen kneser --k 3 --n 7");
    RunResult b = run_cli("gen kneser --k 3 --n 7");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);

    RunResult p1 = run_cli("bounds --k 2 --n 9");
    RunResult p2 = run_cli("bounds --k 2 --n 9");
    CHECK(p1.exit_code == 0);
    CHECK(p1.out == p2.out);
}

TEST_CASE("cover build and verify round trip, exit 0") {
    fs::path g = temp_file("cli_g.json");
    fs::path c = temp_file("cli_c.json");
    REQUIRE(run_cli("gen kneser --k 2 --n 5 -o " + g.string()).exit_code == 0);
    REQUIRE(run_cli("cover build --k 2 --n 5 -o " + c.string()).exit_code == 0);
    RunResult v = run_cli("cover verify " + g.string() + " " + c.string());
    CHECK(v.exit_code == 0);
    CHECK(json::parse(v.out)["ok"] == true);
}

TEST_CASE("cover verify fails with exit 1 on a wrong pairing") {
    fs::path g = temp_file("cli_g26.json");
    fs::path c = temp_file("cli_c25.json");
    REQUIRE(run_cli("gen kneser --k 2 --n 6 -o " + g.string()).exit_code == 0);
    // A cover for different parameters has the wrong vertex count: input error.
    REQUIRE(run_cli("cover build --k 2 --n 5 -o " + c.string()).exit_code == 0);
    CHECK(run_cli("cover verify " + g.string() + " " + c.string()).exit_code == 2);

    // Same vertex count, wrong graph: verification failure.
    fs::path pet = temp_file("cli_pet.json");
    std::ofstream(pet) << write_graph_json(complement(kneser_graph({2, 5})));
    CHECK(run_cli("cover verify " + pet.string() + " " + c.string()).exit_code == 1);
}

TEST_CASE("exact on the petersen graph prints 3") {
    fs::path g = temp_file("cli_pet2.json");
    REQUIRE(run_cli("gen standard --name petersen -o " + g.string()).exit_code == 0);
    RunResult r = run_cli("exact " + g.string() + " --max-dim 4");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["status"] == "exact");
    CHECK(j["value"] == 3);
    CHECK(j["certificate"]["dimension"] == 3);
}

TEST_CASE("exact exits 3 when the budget is exhausted") {
    fs::path g = temp_file("cli_pet3.json");
    REQUIRE(run_cli("gen standard --name petersen -o " + g.string()).exit_code == 0);
    RunResult r = run_cli("exact " + g.string() + " --budget 5");
    CHECK(r.exit_code == 3);
    CHECK(json::parse(r.out)["status"] == "lower-bound");
}

TEST_CASE("profile emits a json array and csv") {
    fs::path g = temp_file("cli_c25.jsongraph");
    fs::path csv = temp_file("cli_profile.csv");
    std::ofstream(g) << write_graph_json(complement(kneser_graph({2, 5})));
    RunResult r = run_cli("profile " + g.string() + " --csv " + csv.string());
    REQUIRE(r.exit_code == 0);
    json values = json::parse(r.out);
    CHECK(values == json::parse("[6,4,2,2,1,1,0]"));
    std::string csv_text = slurp(csv);
    CHECK(csv_text.rfind("i,c\n1,6\n2,4\n", 0) == 0);
}

TEST_CASE("bounds subcommand emits a report") {
    RunResult r = run_cli("bounds --k 2 --n 100");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["best_lower"] == 97);
    CHECK(j["best_upper"] == 98);
}

TEST_CASE("sweep cover covers the grid and reports dimensions") {
    RunResult r = run_cli("sweep cover --k-min 2 --k-max 2 --n-min 5 --n-max 7");
    REQUIRE(r.exit_code == 0);
    json rows = json::parse(r.out);
    REQUIRE(rows.size() == 3);
    for (const auto& row : rows) {
        CHECK(row["ok"] == true);
        CHECK(row["dimension"] == row["n"].get<int>() - 2);
    }
}

TEST_CASE("sweep formulas passes its arithmetic checks") {
    RunResult r = run_cli("sweep formulas --k-max 500 --pascal-a-max 15");
    REQUIRE(r.exit_code == 0);
    for (const auto& check : json::parse(r.out)) CHECK(check["ok"] == true);
}

TEST_CASE("invalid input exits 2") {
    CHECK(run_cli("gen kneser --k 2 --n 3").exit_code == 2);
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("gen kneser").exit_code == 2);
    fs::path bad = temp_file("cli_bad.json");
    std::ofstream(bad) << "{\"n\": 2, \"edges\": [[0,0]]}";
    CHECK(run_cli("exact " + bad.string()).exit_code == 2);
}

TEST_CASE("dot export through the cli") {
    RunResult r = run_cli("gen standard --name cycle --n 4 --format dot");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("graph G {", 0) == 0);
    CHECK(r.out.find("0 -- 1;") != std::string::npos);
}
