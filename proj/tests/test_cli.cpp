#include "catch_amalgamated.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::string kCli = HOLONOMY_CLI_PATH;
const std::string kData = HOLONOMY_DATA_DIR;

struct Result {
    int status = -1;
    std::string out;
    json body;
};

fs::path scratch() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("holonomy_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string data(const std::string& name) { return kData + "/" + name; }

std::string write_file(const std::string& name, const std::string& text) {
    const fs::path p = scratch() / name;
    std::ofstream(p) << text;
    return p.string();
}

Result run(const std::string& args, const std::string& env = "") {
    const fs::path out = scratch() / "stdout.json";
    const std::string cmd = env + (env.empty() ? "" : " ") + "'" + kCli + "' " + args + " > '" + out.string() +
                            "' 2> /dev/null";
    const int raw = std::system(cmd.c_str());
    Result r;
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    if (!r.out.empty()) r.body = json::parse(r.out, nullptr, false);
    return r;
}

}  // namespace

TEST_CASE("holonomy command") {
    const auto r = run("holonomy " + data("cube32.json"));
    REQUIRE(r.status == 0);
    CHECK(r.body["order"] == 4);
    CHECK(r.body["abelian"] == true);
    CHECK(r.body["element_orders"] == json::array({1, 2, 2, 2}));
    CHECK(r.body["generator_parities"].size() == r.body["generators"].size());
    for (const auto& p : r.body["generator_parities"]) CHECK(p == 0);

    const auto based = run("holonomy " + data("cube32.json") + " --base 0,1,4,5");
    REQUIRE(based.status == 0);
    CHECK(based.body["base"] == json::array({"0", "1", "4", "5"}));
    CHECK(run("holonomy " + data("cube32.json") + " --base 0,1,2,7").status == 2);
}

TEST_CASE("invariant and embed-check commands") {
    const auto r = run("invariant " + data("ring5.json"));
    REQUIRE(r.status == 0);
    CHECK(r.body["I"] == 1);
    CHECK(r.body["Z_chain"] == 5);
    CHECK(r.body["CC"] == "1/5");
    CHECK(r.body["Z_subcomplex"] == 5);
    CHECK(r.body["witness"].size() == 6);

    const auto flat = run("invariant gen:cube_skeleton:d=3,k=2");
    REQUIRE(flat.status == 0);
    CHECK(flat.body["I"] == 0);
    CHECK(flat.body["Z_chain"] == "inf");
    CHECK(flat.body["CC"] == "0");

    const auto e = run("embed-check " + data("ring5.json") + " gen:cube_skeleton:d=6,k=2");
    REQUIRE(e.status == 0);
    CHECK(e.body["verdict"] == "obstructed");
    const auto i = run("embed-check " + data("cube32.json") + " gen:cube_skeleton:d=4,k=2");
    CHECK(i.body["verdict"] == "inconclusive");
    CHECK(run("invariant " + data("c5.json")).status == 2);
}

TEST_CASE("hom command") {
    const auto r = run("hom " + data("k2.json") + " " + data("k4.json") + " --homology");
    REQUIRE(r.status == 0);
    CHECK(r.body["cells"] == 50);
    CHECK(r.body["f_vector"] == json::array({12, 24, 14}));
    CHECK(r.body["reduced_betti"] == json::array({0, 0, 1}));

    const auto k = run("hom gen:complete_graph:n=2 gen:complete_graph:n=5 --k 2");
    REQUIRE(k.status == 0);
    CHECK(k.body["homology_connectivity"]["value"] == true);

    const auto cells = run("hom " + data("k2.json") + " gen:complete_graph:n=3 --cells");
    REQUIRE(cells.status == 0);
    REQUIRE(cells.body["cell_list"].size() == 12);
    CHECK(cells.body["cell_list"][0]["dim"] == 0);
    CHECK(cells.body["cell_list"][0]["eta"].contains("1"));
}

TEST_CASE("transport command") {
    const auto r = run("transport " + data("c5.json") + " " + data("k4.json") +
                       " --path '0,1;1,2;2,3;3,4;0,4;0,1' --homology");
    REQUIRE(r.status == 0);
    CHECK(r.body["cells"] == 50);
    CHECK(r.body["fixed_cells"] == 0);
    CHECK(r.body["projectivity"]["0"] == "1");
    CHECK(r.body["projectivity"]["1"] == "0");
    REQUIRE(r.body["induced"].size() == 1);
    CHECK(r.body["induced"][0]["degree"] == 2);
    CHECK(r.body["induced"][0]["matrix"] == json::array({json::array({-1})}));
    CHECK(run("transport " + data("c5.json") + " " + data("k4.json")).status == 2);
    CHECK(run("transport " + data("c5.json") + " " + data("k4.json") + " --path '0,1;2,3'").status != 0);
}

TEST_CASE("chi, phi-check and collapse-check commands") {
    const auto c = run("chi " + data("c5.json"));
    REQUIRE(c.status == 0);
    CHECK(c.body["chi"] == 3);
    CHECK(c.body["clique_tight"] == false);

    const auto p = run("phi-check " + data("c5.json") + " --involution " + data("c5_reflection.json") + " --sigma 2,3");
    REQUIRE(p.status == 0);
    CHECK(p.body["is_phi"] == true);
    CHECK(p.body["tau"]["2"] == "3");
    CHECK(run("phi-check " + data("c5.json") + " --sigma 2,3").status == 2);

    const auto t = run("collapse-check " + data("tree.json"));
    REQUIRE(t.status == 0);
    CHECK(t.body["collapsible"] == true);
    CHECK(t.body["sequence"].size() == 3);
    CHECK(run("collapse-check gen:cycle:n=5").body["collapsible"] == false);
}

TEST_CASE("bubble command") {
    const auto r = run("bubble " + data("ring5.json") + " " + data("ring5_bubble.json"));
    REQUIRE(r.status == 0);
    CHECK(r.body["I_before"] == 1);
    CHECK(r.body["I_after"] == 1);
    CHECK(r.body["complex"]["cubes"].size() == 9);
    const auto bad = write_file("bad_bubble.json", R"({"cubes":[["a0","a1","b0","b1"]],"vertex_map":{"a0":0,"a1":0,"b0":2,"b1":3}})");
    CHECK(run("bubble " + data("ring5.json") + " " + bad).status == 2);
}

TEST_CASE("validation errors exit with status 2") {
    const auto broken = write_file("broken.json", "{\"type\": \"simplicial\", \"facets\": [[\"a\", \"b\"]");
    const auto r = run("chi " + broken);
    CHECK(r.status == 2);
    CHECK(r.body.contains("error"));

    const auto repeated = write_file("repeated.json", R"({"type":"simplicial","facets":[["a","a"]]})");
    CHECK(run("chi " + repeated).status == 2);
    const auto cube = write_file("cube.json", R"({"type":"cubical","cubes":[["a","b","c"]]})");
    const auto bad_cube = run("invariant " + cube);
    CHECK(bad_cube.status == 2);
    CHECK(bad_cube.body["error"].get<std::string>().find("a") != std::string::npos);
    const auto lattice = write_file("lattice.json", R"({"type":"cubical","cubes":[["a","b","c","d"],["a","e","f","d"]]})");
    CHECK(run("invariant " + lattice).status == 2);

    CHECK(run("chi " + (scratch() / "missing.json").string()).status == 2);
    CHECK(run("chi gen:nonsense:n=3").status == 2);
    CHECK(run("chi gen:cycle:n=x").status == 2);
    CHECK(run("frobnicate " + data("c5.json")).status == 2);
    CHECK(run("chi").status == 2);
}

TEST_CASE("size guards exit with status 3") {
    CHECK(run("hom gen:path:m=41 gen:simplex:d=1").status == 3);
    CHECK(run("hom " + data("k2.json") + " " + data("k4.json"), "HOLONOMY_MAX_CELLS=10").status == 3);
    CHECK(run("hom " + data("k2.json") + " " + data("k4.json"), "HOLONOMY_MAX_CELLS=50").status == 0);
    CHECK(run("invariant gen:square_ring:m=21").status == 0);
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> commands{"holonomy " + data("cube32.json"), "invariant gen:square_ring:m=7,twist=1",
                                            "hom " + data("c5.json") + " gen:complete_graph:n=3 --cells --homology",
                                            "collapse-check gen:random_tree_like:facets=6,d=2 --seed 11"};
    for (const auto& args : commands) {
        const auto a = run(args);
        const auto b = run(args);
        CHECK(a.status == 0);
        CHECK(a.out == b.out);
    }
    // The seed selects the random complex.
    const auto s1 = run("collapse-check gen:random_tree_like:facets=6,d=2 --seed 1");
    const auto s2 = run("collapse-check gen:random_tree_like:facets=6,d=2 --seed 2");
    CHECK(s1.status == 0);
    CHECK(s2.status == 0);
}

TEST_CASE("--out writes the report to a file") {
    const auto path = (scratch() / "report.json").string();
    fs::remove(path);
    const auto r = run("chi " + data("c5.json") + " --out " + path);
    CHECK(r.status == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    CHECK(json::parse(in)["chi"] == 3);
}
