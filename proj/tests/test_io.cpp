#include <doctest.h>

#include <sstream>

#include "chibound/errors.hpp"
#include "chibound/gen.hpp"
#include "chibound/graph.hpp"
#include "chibound/io.hpp"
#include "chibound/report_json.hpp"
#include "chibound/recognition.hpp"

using namespace chibound;

namespace {

Graph random_graph(int n, double p, uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_unit() < p) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

} // namespace

TEST_CASE("edge list round trip keeps labels and isolated vertices") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = random_graph(11, 0.25, 70000 + seed); // isolated vertices likely
        std::ostringstream out;
        io::write_edge_list(g, out);
        std::istringstream in(out.str());
        CHECK(io::read_edge_list(in) == g);
    }
}

TEST_CASE("dimacs round trip keeps labels") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = random_graph(9, 0.3, 71000 + seed);
        std::ostringstream out;
        io::write_dimacs(g, out);
        std::istringstream in(out.str());
        CHECK(io::read_dimacs(in) == g);
    }
}

TEST_CASE("format sniffing") {
    std::istringstream dimacs("c comment\np edge 3 2\ne 1 2\ne 2 3\n");
    Graph a = io::read_auto(dimacs);
    CHECK(a.vertex_count() == 3);
    CHECK(a.edge_count() == 2);
    CHECK(a.adjacent(0, 1)); // 1-based input

    std::istringstream edges("# n 4\n0 1\n2 3\n");
    Graph b = io::read_auto(edges);
    CHECK(b.vertex_count() == 4);
    CHECK(b.edge_count() == 2);
}

TEST_CASE("writers emit sorted, byte-stable output") {
    Graph g = Graph::from_edges(4, {{2, 3}, {0, 1}, {1, 3}});
    std::ostringstream a, b;
    io::write_edge_list(g, a);
    io::write_edge_list(Graph::from_edges(4, {{1, 3}, {0, 1}, {3, 2}}), b);
    CHECK(a.str() == b.str());
    CHECK(a.str() == "# n 4\n0 1\n1 3\n2 3\n");

    std::ostringstream d;
    io::write_dimacs(g, d);
    CHECK(d.str() == "p edge 4 3\ne 1 2\ne 2 4\ne 3 4\n");
}

TEST_CASE("parse errors carry line and column") {
    std::istringstream junk("p edge 3 1\ne 1 9\n");
    try {
        io::read_dimacs(junk);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column > 1);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }

    std::istringstream loop("0 0\n");
    CHECK_THROWS_AS(io::read_edge_list(loop), ParseError);

    std::istringstream garbage("0 x\n");
    CHECK_THROWS_AS(io::read_edge_list(garbage), ParseError);

    std::istringstream headerless("e 1 2\n");
    CHECK_THROWS_AS(io::read_dimacs(headerless), ParseError);
}

TEST_CASE("fixture files match the named constructions") {
    CHECK(io::read_file(std::string(FIXTURES_DIR) + "/grotzsch.edges") == named::grotzsch());
    CHECK(io::read_file(std::string(FIXTURES_DIR) + "/bull.edges") == named::bull());
    CHECK(io::read_file(std::string(FIXTURES_DIR) + "/prism4.edges") == named::prism(4));
    CHECK(io::read_file(std::string(FIXTURES_DIR) + "/planted_p6_case1.edges") ==
          planted_instance(PlantKind::p6_case1));
}

TEST_CASE("json reports use stable keys") {
    ojson j = to_json(classify(named::bull(), 6));
    auto it = j.begin();
    CHECK(it.key() == "n");
    CHECK(j["bull_free"] == false);
    CHECK(j["witnesses"]["bull"].size() == 5);

    // 6-decimal bound formatting
    ojson b = to_json(eval_bounds(named::grotzsch(), classify(named::grotzsch(), 6)));
    CHECK(b["values"]["harris"] == "6.633250");
    CHECK(b["values"]["molloy_delta"] != "undefined");
    CHECK(b["applicable"]["molloy_delta"] == "asymptotic_only");

    ojson one = to_json(eval_bounds(named::complete(1), classify(named::complete(1), 2)));
    CHECK(one["values"]["poljak_tuza"] == "undefined");
}

TEST_CASE("content digest is stable") {
    CHECK(content_digest("") == "cbf29ce484222325");
    CHECK(content_digest("a") != content_digest("b"));
    CHECK(content_digest("chibound") == content_digest("chibound"));
}
