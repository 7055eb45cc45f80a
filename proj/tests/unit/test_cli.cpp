#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pfactor/cli.hpp"
#include "pfactor/families.hpp"
#include "pfactor/graph_io.hpp"

using namespace pfactor;
using json = nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<json> lines(const std::string& text) {
    std::vector<json> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(json::parse(line));
    return out;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    const char* base = std::getenv("PFACTOR_TEST_TMP");
    const std::filesystem::path dir = base ? base : std::filesystem::temp_directory_path();
    const std::filesystem::path p = dir / name;
    std::ofstream(p, std::ios::binary) << content;
    return p;
}

}  // namespace

TEST_SUITE("graph sources") {
    TEST_CASE("constructor expressions") {
        CHECK(cli::load_single_graph("h:8,1") == h_extremal(8, 1));
        CHECK(cli::load_single_graph("l:13,3") == l_family(13, 3));
        const std::vector<std::size_t> parts{4, 1, 1};
        CHECK(cli::load_single_graph("clique_join:2,[4,1,1]") == clique_join(2, parts));
        CHECK(cli::load_single_graph("complete:5") == complete(5));
        CHECK(cli::load_single_graph("cycle:6") == cycle(6));
        CHECK(cli::load_single_graph("path:3") == path(3));
        CHECK(cli::load_single_graph("star:4") == star(4));
        CHECK(cli::load_single_graph("kst:3,4") == complete_bipartite(3, 4));
        CHECK(cli::load_single_graph("petersen") == petersen());
        CHECK(cli::load_single_graph("C~") == complete(4));
        CHECK(cli::load_single_graph("g6:C~") == complete(4));
        CHECK_THROWS_AS(cli::load_single_graph("nope:3"), FormatError);
        CHECK_THROWS_AS(cli::load_single_graph("h:3"), FormatError);
        CHECK_THROWS_AS(cli::load_single_graph("complete:70"), CapacityError);
    }

    TEST_CASE("files") {
        const auto edges = temp_file("tri.edges", "3 3\n0 1\n1 2\n0 2\n");
        CHECK(cli::load_single_graph("edges:" + edges.string()) == complete(3));
        const auto g6 = temp_file("two.g6", "C~\nBw\n");
        CHECK(cli::load_graph_source("file:" + g6.string()).size() == 2);
        CHECK_THROWS_AS(cli::load_single_graph("file:" + g6.string()), FormatError);
        CHECK_THROWS_AS(cli::load_single_graph("edges:/nonexistent/x"), FormatError);
    }
}

TEST_SUITE("commands") {
    TEST_CASE("construct") {
        const Outcome h = call({"construct", "h", "--n", "8", "--a", "1"});
        CHECK(h.code == 0);
        CHECK(h.out == write_graph6(disjoint_union(complete(1), complete(7))) + "\n");
        const Outcome l = call({"construct", "l", "--n", "13", "--s", "3", "--format", "json"});
        CHECK(json::parse(l.out)["graph6"] == write_graph6(l_family(13, 3)));
        const Outcome cj = call({"construct", "clique-join", "--s", "2", "--parts", "4,1,1"});
        const std::vector<std::size_t> parts{4, 1, 1};
        CHECK(cj.out == write_graph6(clique_join(2, parts)) + "\n");
        CHECK(call({"construct", "h", "--n", "3", "--a", "3"}).code == 2);
        CHECK(call({"construct", "h", "--n", "80", "--a", "1"}).code == 3);
    }

    TEST_CASE("factor check") {
        const Outcome no = call({"factor", "check", "--graph", "h:8,1", "-a", "1", "-b", "3", "--certificate"});
        CHECK(no.code == 0);
        const json j = json::parse(no.out);
        CHECK(j["decision"] == "no");
        CHECK(j["certificate"]["eta"] == -2);
        CHECK(j["certificate"]["S"].empty());
        CHECK(j["certificate"]["T"].size() == 1);

        const Outcome yes = call({"factor", "check", "--graph", "petersen", "-a", "1", "-b", "1"});
        const json y = json::parse(yes.out);
        CHECK(y["decision"] == "yes");
        CHECK(y["factor_edges"].size() == 5);
        CHECK_FALSE(y.contains("certificate"));

        // Gadget "no" without a trivial witness: the criterion supplies one.
        const Outcome two = call({"factor", "check", "--graph", "h:8,2", "-a", "2", "-b", "2", "--certificate"});
        CHECK(json::parse(two.out)["certificate"]["eta"].get<int>() <= -1);

        for (const char* m : {"lovasz", "matching", "enum"}) {
            const Outcome c5 = call({"factor", "check", "--graph", "cycle:5", "-a", "1", "-b", "1", "--method", m});
            CHECK(json::parse(c5.out)["decision"] == "no");
            CHECK(json::parse(c5.out)["method"] == m);
        }
        CHECK(call({"factor", "check", "--graph", "complete:20", "-a", "1", "-b", "1", "--method", "lovasz"}).code == 3);
        CHECK(call({"factor", "check", "--graph", "C~", "-a", "2", "-b", "3"}).code == 2);
        CHECK(call({"factor", "check", "--graph", "C~", "-a", "1", "-b", "1", "--format", "text"}).out == "C~ yes\n");
    }

    TEST_CASE("spectral commands") {
        const Outcome r = call({"spectral", "radius", "--graph", "complete:7"});
        CHECK(r.code == 0);
        const json j = json::parse(r.out);
        CHECK(j["lo"].get<double>() <= 6.0 + 1e-10);
        CHECK(j["hi"].get<double>() >= 6.0 - 1e-10);
        CHECK(j["method"] == "power-iteration");

        const json s = json::parse(call({"spectral", "spectrum", "--graph", "complete:4"}).out);
        CHECK(s["eigenvalues"].size() == 4);

        const json c = json::parse(call({"spectral", "charpoly", "--graph", "complete:3"}).out);
        CHECK(c["polynomial"] == "x^3 - 3x - 2");
        CHECK(c["coefficients"] == json::array({-2, -3, 0, 1}));

        const json cmp = json::parse(call({"spectral", "compare", "--graph", "cycle:6", "--against", "h:6,1"}).out);
        CHECK(cmp["order"] == "less");
        const json tie =
            json::parse(call({"spectral", "compare", "--graph", "cycle:6", "--against", "clique_join:0,[3,3]"}).out);
        CHECK(tie["order"] == "equal");
        CHECK(tie["method"] == "exact");
        CHECK(call({"spectral", "radius", "--graph", "complete:4", "--tol", "0"}).code == 2);
    }

    TEST_CASE("batch files") {
        const auto three = temp_file("three.g6", "C~\nBw\nD~{\n");
        const Outcome r = call({"spectral", "radius", "--graph", "file:" + three.string()});
        CHECK(r.code == 0);
        const auto records = lines(r.out);
        REQUIRE(records.size() == 3);
        CHECK(records[0]["line"] == 1);
        CHECK(records[1]["graph"] == "Bw");
        CHECK(records[2]["line"] == 3);

        const auto empty = temp_file("empty.g6", "");
        const Outcome e = call({"spectral", "radius", "--graph", "file:" + empty.string()});
        CHECK(e.code == 0);
        CHECK(e.out.empty());

        const auto bad = temp_file("bad.g6", "C~\nnot graph6\nBw\n");
        const Outcome b = call({"factor", "check", "--graph", "file:" + bad.string(), "-a", "1", "-b", "1"});
        CHECK(b.code == 1);
        const auto rows = lines(b.out);
        REQUIRE(rows.size() == 3);
        CHECK(rows[1].contains("error"));
        CHECK(rows[2]["decision"] == "no");  // Bw is K_3
        CHECK_FALSE(b.err.empty());
    }

    TEST_CASE("verify commands") {
        const Outcome t = call({"verify", "theorem", "-a", "1", "-b", "1", "-n", "6"});
        CHECK(t.code == 0);
        const json j = json::parse(t.out);
        CHECK(j["kind"] == "theorem");
        CHECK(j["violations"].empty());
        CHECK_FALSE(j.contains("runtime_ms"));
        CHECK(call({"verify", "theorem", "-a", "1", "-b", "1", "-n", "6"}).out == t.out);
        CHECK(json::parse(call({"verify", "theorem", "-a", "1", "-b", "1", "-n", "6", "--timing"}).out)
                  .contains("runtime_ms"));
        const Outcome csv = call({"verify", "theorem", "-a", "1", "-b", "1", "-n", "6", "--format", "csv"});
        CHECK(csv.out.rfind("a,b,n,", 0) == 0);
        CHECK(call({"verify", "theorem", "-a", "1", "-b", "1", "-n", "7"}).code == 2);

        const Outcome nf = call({"verify", "lemma", "--which", "nofactor", "-a", "1", "-b", "3", "-n", "8,10,12"});
        CHECK(nf.code == 0);
        CHECK(json::parse(nf.out)["lemma"] == "nofactor");
        const Outcome zhw = call({"verify", "lemma", "--which", "zhw", "-s", "1", "-n", "8", "--q-max", "3"});
        CHECK(zhw.code == 0);
        const Outcome sp = call({"verify", "lemma", "--which", "spectral", "--s-max", "1", "--n-span", "3",
                                 "--star-n-max", "6"});
        CHECK(sp.code == 0);
        CHECK(json::parse(sp.out)["counts"]["points"] == 6);
    }

    TEST_CASE("usage errors and help") {
        const Outcome unknown = call({"factor", "check", "--graph", "C~", "-a", "1", "-b", "1", "--bogus"});
        CHECK(unknown.code == 2);
        CHECK(unknown.out.empty());
        CHECK(unknown.err.find("--graph") != std::string::npos);
        CHECK(call({}).code == 2);
        CHECK(call({"frobnicate"}).code == 2);
        const Outcome help = call({"verify", "theorem", "--help"});
        CHECK(help.code == 0);
        for (const char* flag : {"-a", "-b", "-n", "--mode", "--seed", "--samples", "--jobs"})
            CHECK(help.out.find(flag) != std::string::npos);
        const Outcome fhelp = call({"factor", "check", "--help"});
        for (const char* flag : {"--graph", "--method", "--certificate"}) CHECK(fhelp.out.find(flag) != std::string::npos);
    }
}
