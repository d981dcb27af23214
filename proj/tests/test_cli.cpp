#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;

    nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Run tcl_run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    Run r;
    r.code = tcl::run_cli(args, in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / ("tcl_cli_" + name);
    std::ofstream(path) << content;
    return path.string();
}

const char* const kK5 =
    "3 5\n1 2 3\n1 2 4\n1 2 5\n1 3 4\n1 3 5\n1 4 5\n2 3 4\n2 3 5\n2 4 5\n3 4 5\n";

}  // namespace

TEST_CASE("info and formats") {
    const auto r = tcl_run({"info", "-"}, kK5);
    REQUIRE(r.code == 0);
    const auto j = r.json();
    CHECK(j["n"] == 5);
    CHECK(j["edges"] == 10);
    CHECK(j["min_degree"] == 6);
    CHECK(j["tightly_connected"] == true);

    const auto text = tcl_run({"info", "-", "--format", "text"}, kK5);
    CHECK(text.code == 0);
    CHECK(text.out.find("min_degree: 6") != std::string::npos);
    const auto csv = tcl_run({"info", "-", "--format", "csv"}, kK5);
    CHECK(csv.code == 0);
    CHECK(csv.out.find("min_degree") != std::string::npos);

    const auto graph = tcl_run({"info", "-"}, "2 4\n1 2\n3 4\n");
    CHECK(graph.code == 0);
    CHECK(graph.json()["edges"] == 2);
}

TEST_CASE("usage and input errors exit 2") {
    CHECK(tcl_run({}).code == 2);
    CHECK(tcl_run({"info"}).code == 2);
    CHECK(tcl_run({"info", "/nonexistent/x.3g"}).code == 2);
    CHECK(tcl_run({"info", "-"}, "3 4\n1 2 9\n").code == 2);
    CHECK(tcl_run({"info", "-"}, "3 4\n1 2 3\n1 2 3\n").code == 2);
    CHECK(tcl_run({"info", "-", "--format", "xml"}, kK5).code == 2);
    CHECK(tcl_run({"extremal", "--n", "9", "--a", "0"}).code == 2);
    CHECK(tcl_run({"verify", "nosuch"}).code == 2);
    CHECK(tcl_run({"random", "--n", "8", "--p", "1.5"}).code == 2);
    const auto bad = tcl_run({"link", "-", "9"}, kK5);
    CHECK(bad.code == 2);
    CHECK(!bad.err.empty());
}

TEST_CASE("generators emit parseable files") {
    const auto e = tcl_run({"extremal", "--n", "9", "--a", "2"});
    REQUIRE(e.code == 0);
    CHECK(e.out.rfind("3 9\n#", 0) == 0);
    const auto info = tcl_run({"info", "-"}, e.out);
    CHECK(info.json()["edges"] == 49);
    CHECK(info.json()["min_degree"] == 13);

    const auto a = tcl_run({"random", "--n", "10", "--p", "0.5", "--seed", "3"});
    const auto b = tcl_run({"random", "--n", "10", "--p", "0.5", "--seed", "3"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find('#') != std::string::npos);

    const auto g = tcl_run({"random", "--n", "9", "--graph", "--edges", "21", "--seed", "1"});
    CHECK(g.code == 0);
    CHECK(tcl_run({"info", "-"}, g.out).json()["edges"] == 21);

    const auto miss = tcl_run({"random", "--n", "9", "--min-degree", "28", "--p", "0.1", "--max-attempts", "2"});
    CHECK(miss.code == 1);
}

TEST_CASE("seed falls back to the environment") {
    ::setenv("TCL_SEED", "41", 1);
    const auto env = tcl_run({"random", "--n", "9", "--p", "0.5"});
    ::unsetenv("TCL_SEED");
    const auto flag = tcl_run({"random", "--n", "9", "--p", "0.5", "--seed", "41"});
    const auto zero = tcl_run({"random", "--n", "9", "--p", "0.5"});
    CHECK(env.out == flag.out);
    CHECK(env.out != zero.out);
}

TEST_CASE("link, components, cycle") {
    const auto link = tcl_run({"link", "-", "1"}, kK5);
    REQUIRE(link.code == 0);
    CHECK(link.out.rfind("2 5\n", 0) == 0);

    const auto comp = tcl_run({"components", "-"}, kK5);
    REQUIRE(comp.code == 0);
    CHECK(comp.json()["component_count"] == 1);

    const auto cyc = tcl_run({"cycle", "-"}, kK5);
    REQUIRE(cyc.code == 0);
    CHECK(cyc.json()["length"] == 5);

    const auto none = tcl_run({"cycle", "-"}, "3 6\n1 2 3\n");
    CHECK(none.code == 0);
    CHECK(none.json()["length"] == 0);

    const auto ext = tcl_run({"extremal", "--n", "9", "--a", "2"});
    CHECK(tcl_run({"cycle", "-"}, ext.out).json()["length"] == 6);
}

TEST_CASE("graph commands") {
    const auto m = tcl_run({"match", "-"}, "2 6\n1 2\n2 3\n3 4\n4 5\n5 6\n");
    REQUIRE(m.code == 0);
    CHECK(m.json()["size"] == 3);

    const auto eg = tcl_run({"egcheck", "-"}, "2 6\n1 2\n2 3\n3 4\n4 5\n5 6\n");
    CHECK(eg.code == 0);
    CHECK(eg.json()["holds"] == true);

    const auto dense = tcl_run({"random", "--n", "9", "--graph", "--edges", "30", "--seed", "2"});
    const auto f1 = temp_file("g1.2g", dense.out);
    const auto f2 = temp_file("g2.2g", tcl_run({"random", "--n", "9", "--graph", "--edges", "30", "--seed", "5"}).out);
    CHECK(tcl_run({"graphmeet", f1, f2}).code == 0);

    const auto sparse = temp_file("g3.2g", "2 9\n1 2\n");
    CHECK(tcl_run({"graphmeet", f1, sparse}).code == 2);
    CHECK(tcl_run({"graphmeet", f1, sparse, "--observe"}).code != 2);
    const auto other_n = temp_file("g4.2g", "2 12\n1 2\n");
    CHECK(tcl_run({"graphmeet", f1, other_n, "--observe"}).code == 2);
}

TEST_CASE("fracmatch") {
    const auto ext = tcl_run({"extremal", "--n", "9", "--a", "2"});
    const auto r = tcl_run({"fracmatch", "-"}, ext.out);
    CHECK(r.code == 0);
    CHECK(r.json()["certificate_valid"] == true);
    CHECK(r.json().contains("certificate"));
    CHECK(tcl_run({"fracmatch", "-", "--lemma"}, ext.out).code == 2);

    const auto k9 = tcl_run({"extremal", "--n", "9", "--a", "9"});
    const auto lemma = tcl_run({"fracmatch", "-", "--lemma"}, k9.out);
    CHECK(lemma.code == 0);
}

TEST_CASE("slice, reduce, pipeline") {
    const auto k = tcl_run({"extremal", "--n", "18", "--a", "18"});
    CHECK(tcl_run({"slice", "-", "--t", "6", "--seed", "1"}, k.out).code == 0);
    CHECK(tcl_run({"reduce", "-", "--t", "6", "--seed", "1"}, k.out).code == 0);
    const auto p1 = tcl_run({"pipeline", "-", "--t", "6", "--seed", "1", "--no-timings"}, k.out);
    const auto p2 = tcl_run({"pipeline", "-", "--t", "6", "--seed", "1", "--no-timings"}, k.out);
    CHECK(p1.code == 0);
    CHECK(p1.out == p2.out);

    const auto ext = tcl_run({"extremal", "--n", "30", "--a", "6"});
    CHECK(tcl_run({"pipeline", "-", "--seed", "1"}, ext.out).code == 1);
}

TEST_CASE("verify") {
    const auto r = tcl_run({"verify", "lemma8", "--n", "5,6", "--trials", "10", "--seed", "2"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["passed"] == 20);
    CHECK(tcl_run({"verify", "erdos-gallai", "--n", "6", "--trials", "10"}).code == 0);
    CHECK(tcl_run({"verify", "graphmeet", "--n", "9", "--trials", "5", "--jobs", "2"}).code == 0);
}
