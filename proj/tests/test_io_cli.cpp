#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "degseq/cli.hpp"
#include "degseq/errors.hpp"
#include "degseq/io.hpp"
#include "support/brute.hpp"

using namespace degseq;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string graph6_line(const std::string& text) { return text.substr(0, text.find('\n')); }

} // namespace

TEST_CASE("graph6 known strings") {
    CHECK(to_graph6(SimpleGraph(0)) == "?");
    CHECK(to_graph6(complete_graph(2)) == "A_");
    CHECK(to_graph6(path_graph(3)) == "Bg");
    CHECK(to_graph6(cycle_graph(5)) == "Dhc");
    CHECK(to_graph6(petersen_graph()).size() == 1 + 8);
    CHECK(from_graph6(">>graph6<<Dhc\n") == cycle_graph(5));
    CHECK_THROWS_AS(from_graph6("D"), ParseError);
    CHECK_THROWS_AS(from_graph6("Dhc!"), ParseError);
}

TEST_CASE("graph6 round trip on random graphs up to 70 vertices") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = std::uniform_int_distribution<int>(0, 70)(rng);
        std::bernoulli_distribution coin(0.3);
        SimpleGraph g(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (coin(rng)) g.add_edge(u, v);
        CHECK(from_graph6(to_graph6(g)) == g);
    }
}

TEST_CASE("witness JSON round trip") {
    StarSubdivisionWitness w{3, {0, 2, 4}, {{0, 2, 1}, {0, 4, std::nullopt}, {2, 4, 3}}, {{2, {0, 4}}}};
    const auto back = witness_from_json(Json::parse(to_json(w).dump()));
    CHECK(back == w);
    CHECK(verify_witness(cycle_graph(5), back).ok());
    CHECK_THROWS_AS(witness_from_json(Json::parse(R"({"order": 3})")), ParseError);
}

TEST_CASE("dot output") {
    const auto dot = to_dot(path_graph(2));
    CHECK(dot.find("0 -- 1") != std::string::npos);
}

TEST_CASE("cli check") {
    const auto ok = run({"check", "2,2,2,2,2"});
    REQUIRE(ok.code == kExitOk);
    const auto j = Json::parse(ok.out);
    CHECK(j["schema"] == 1);
    CHECK(j["verdicts"]["graphic"] == true);
    CHECK(j["verdicts"]["omega"]["value"] == 2);
    CHECK(j["verdicts"]["omega"]["method"] == "rao-exact");
    CHECK(j["verdicts"]["profile"]["verdict"] == "NontrivialBasicProfile");
    const auto& art = j["artifacts"]["omega_realization"];
    CHECK(verify_witness(from_graph6(art["graph6"].get<std::string>()), witness_from_json(art["witness"])).ok());

    CHECK(Json::parse(run({"check", "3,3,1,1"}).out)["verdicts"]["graphic"] == false);
    CHECK(Json::parse(run({"check", "1"}).out)["verdicts"]["graphic"] == false);
    CHECK(run({"check", "2,x"}).code == kExitParse);

    const auto oracle = Json::parse(run({"check", "2,2,2,2,2", "--oracle"}).out);
    CHECK(oracle["verdicts"]["chi"]["value"] == 3);
    CHECK(oracle["verdicts"]["chi"]["method"] == "oracle-enumeration");
    CHECK(oracle["verdicts"]["h1"]["value"] == 3);
    CHECK(oracle["verdicts"]["bounds"]["sf"]["tight"] == true);
    CHECK(oracle["verdicts"]["bounds"]["reed"]["tight"] == true);

    CHECK(run({"check", "1,1,1,1,1,1,1,1", "--oracle"}).code == kExitResource);
    CHECK(run({"check", "1,1,1,1,1,1,1,1", "--oracle", "--max-n", "8"}).code == kExitOk);
}

TEST_CASE("cli realize") {
    const auto tree = run({"realize", "2,1,1", "--tree"});
    CHECK(tree.code == kExitOk);
    CHECK(from_graph6(graph6_line(tree.out)).degree_list() == std::vector<int>{2, 1, 1});
    CHECK(from_graph6(graph6_line(tree.out)).edge_count() == 2);

    const auto clique = run({"realize", "3,3,2,2,2", "--clique", "3"});
    CHECK(clique.code == kExitOk);
    const auto g = from_graph6(graph6_line(clique.out));
    CHECK(brute::is_clique(g, {0, 1, 2}));
    CHECK(clique.out.find("verified") != std::string::npos);

    const auto bad_tree = run({"realize", "2,2", "--tree"});
    CHECK(bad_tree.code == kExitInfeasible);
    CHECK(bad_tree.err.find("sum = 2n-2") != std::string::npos);

    CHECK(run({"realize", "2,2,2,2,2", "--clique", "3"}).code == kExitInfeasible);
    const auto bip = run({"realize", "--bipartite", "1,1/2"});
    CHECK(bip.code == kExitInfeasible);
    CHECK(bip.err.find("n <= m") != std::string::npos);
    CHECK(run({"realize", "--bipartite", "2,2/2,1,1"}).code == kExitOk);
    CHECK(run({"realize", "--low-degree", "5,3"}).code == kExitOk);
    CHECK(run({"realize", "--low-degree", "2,2"}).code == kExitInfeasible);
    const auto dot = run({"realize", "2,2,2", "--dot"});
    CHECK(dot.out.find("graph G {") != std::string::npos);
    CHECK(run({"realize", "3,3,1,1"}).code == kExitInfeasible);
}

TEST_CASE("cli hajos") {
    const auto c5 = run({"hajos", "2,2,2,2,2"});
    REQUIRE(c5.code == kExitOk);
    auto j = Json::parse(c5.out);
    auto g = from_graph6(j["artifacts"]["realization"]["graph6"].get<std::string>());
    auto w = witness_from_json(j["artifacts"]["realization"]["witness"]);
    CHECK(g.degree_sequence() == DegreeSequence{2, 2, 2, 2, 2});
    CHECK(w.order == 3);
    CHECK(verify_witness(g, w).ok());
    CHECK(j["artifacts"]["plan"]["case"] == "CaseOne");

    j = Json::parse(run({"hajos", "4,4,4,4,4,4,4"}).out);
    g = from_graph6(j["artifacts"]["realization"]["graph6"].get<std::string>());
    w = witness_from_json(j["artifacts"]["realization"]["witness"]);
    CHECK(g.degree_sequence() == DegreeSequence(std::vector<int>(7, 4)));
    CHECK(w.order == 4);
    CHECK(verify_witness(g, w).ok());

    CHECK(run({"hajos", "2,2,2,2"}).code == kExitInfeasible);

    const auto pipe = run({"hajos", "--pipeline", to_graph6(cycle_graph(5))});
    REQUIRE(pipe.code == kExitOk);
    j = Json::parse(pipe.out);
    CHECK(j["verdicts"]["h1"]["value"] == 3);
    CHECK(run({"hajos", "--pipeline", "!!"}).code == kExitParse);
}

TEST_CASE("cli sweep") {
    const auto a = run({"sweep", "--max-n", "5", "--checks", "sf,reed"});
    CHECK(a.code == kExitOk);
    CHECK(a.out.find("sf") != std::string::npos);
    CHECK(run({"sweep", "--max-n", "3", "--checks", "hajos"}).code == kExitOk);
    CHECK(run({"sweep", "--max-n", "99"}).code == kExitResource);
    CHECK(run({"sweep", "--max-n", "3", "--checks", "bogus"}).code == kExitParse);

    const auto path = std::filesystem::temp_directory_path() / "degseq_sweep_report.json";
    CHECK(run({"sweep", "--max-n", "4", "--out", path.string()}).code == kExitOk);
    std::ifstream f(path);
    const auto report = Json::parse(f);
    CHECK(report["schema"] == 1);
    CHECK(report["clean"] == true);
    std::filesystem::remove(path);
}

TEST_CASE("cli usage errors") {
    CHECK(run({}).code == kExitParse);
    CHECK(run({"frobnicate"}).code == kExitParse);
    CHECK(run({"realize", "2,1,1", "--tree", "--clique", "2"}).code == kExitParse);
}

TEST_CASE("environment override of the oracle cap") {
    ::setenv("DEGSEQ_ORACLE_LIMIT", "8", 1);
    CHECK(OracleLimits::from_env().chi_layer == 8);
    CHECK(run({"check", "1,1,1,1,1,1,1,1", "--oracle"}).code == kExitOk);
    ::setenv("DEGSEQ_ORACLE_LIMIT", "junk", 1);
    CHECK(OracleLimits::from_env().chi_layer == OracleLimits{}.chi_layer);
    ::unsetenv("DEGSEQ_ORACLE_LIMIT");
}
