#include <doctest.h>

#include <algorithm>

#include "chibound/decomposition.hpp"
#include "chibound/errors.hpp"
#include "chibound/gen.hpp"
#include "chibound/graph.hpp"
#include "chibound/oracle.hpp"
#include "chibound/recognition.hpp"

using namespace chibound;

TEST_CASE("splitmix64 reference stream") {
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xE220A8397B1DCDAFull);
    CHECK(rng.next() == 0x6E789E6AA1B965F4ull);
    CHECK(rng.next() == 0x06C45D188009454Full);
    SplitMix64 rng2(1234567);
    CHECK(rng2.next() == 0x599ED017FB08FC85ull);
    CHECK(rng2.next() == 0x2C73F08458540FA5ull);
    SplitMix64 u(9);
    for (int i = 0; i < 100; ++i) {
        double x = u.next_unit();
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
    }
}

TEST_CASE("sampling is deterministic") {
    SamplerSpec spec{20, 0.3, {Pattern::bull, Pattern::diamond}, 1, 64, false};
    Graph a = sample(spec);
    Graph b = sample(spec);
    CHECK(a == b);
    CHECK_FALSE(find_bull(a).has_value());
    CHECK_FALSE(find_diamond(a).has_value());
}

TEST_CASE("sampler edge cases") {
    SamplerSpec empty{10, 0.0, {Pattern::bull}, 3, 64, false};
    CHECK(sample(empty).edge_count() == 0);

    SamplerSpec tf{15, 0.2, {Pattern::triangle}, 7, 64, false};
    CHECK(count_triangles(sample(tf)) == 0);

    SamplerSpec bad{0, 0.5, {}, 1, 4, false};
    CHECK_THROWS_AS(sample(bad), Error);

    // connectivity at p = 0 is unreachable for n > 1: the attempt budget runs out
    SamplerSpec lonely{5, 0.0, {}, 1, 3, true};
    CHECK_THROWS_AS(sample(lonely), Error);
}

TEST_CASE("no escapes: sampled graphs pass classification for their family") {
    for (uint64_t seed = 0; seed < 1000; ++seed) {
        std::vector<Pattern> family;
        switch (seed % 4) {
            case 0: family = {Pattern::bull, Pattern::diamond}; break;
            case 1: family = {Pattern::triangle}; break;
            case 2: family = {Pattern::p5, Pattern::bull, Pattern::diamond}; break;
            case 3: family = {Pattern::p6, Pattern::bull, Pattern::diamond}; break;
        }
        SamplerSpec spec{6 + (int)(seed % 7), 0.2 + 0.1 * (seed % 5), family, 50000 + seed, 64, false};
        Graph g = sample(spec);
        for (Pattern p : family) CHECK_FALSE(find_pattern(g, p).has_value());
    }
}

TEST_CASE("repair deletes one edge per round until the family is clean") {
    // replay of the repair rule, watching the edge count strictly decrease
    for (uint64_t seed = 0; seed < 50; ++seed) {
        SplitMix64 rng(mix_seed(60000, seed));
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < 10; ++u)
            for (int v = u + 1; v < 10; ++v)
                if (rng.next_unit() < 0.4) edges.emplace_back(u, v);
        Graph g = Graph::from_edges(10, edges);
        std::vector<Pattern> family{Pattern::bull, Pattern::diamond, Pattern::triangle};
        long long prev = g.edge_count();
        int guard = 0;
        while (true) {
            std::optional<std::vector<int>> w;
            for (Pattern p : family)
                if ((w = find_pattern(g, p))) break;
            if (!w) break;
            std::pair<int, int> cut{-1, -1};
            std::vector<int> vs = *w;
            std::sort(vs.begin(), vs.end());
            for (size_t a = 0; a < vs.size(); ++a)
                for (size_t b = a + 1; b < vs.size(); ++b)
                    if (g.adjacent(vs[a], vs[b]) && cut.first < 0) cut = {vs[a], vs[b]};
            auto es = g.edges();
            es.erase(std::remove(es.begin(), es.end(), cut), es.end());
            g = Graph::from_edges(10, es);
            CHECK(g.edge_count() == prev - 1);
            prev = g.edge_count();
            REQUIRE(++guard < 100);
        }
        for (Pattern p : family) CHECK_FALSE(find_pattern(g, p).has_value());
    }
}

TEST_CASE("planted instances belong to their classes and hit their cases") {
    struct Expect {
        PlantKind kind;
        LayerCase layer_case;
        int palette;
    };
    for (const auto& e : {Expect{PlantKind::lemma31_two_part, LayerCase::two_part, 3},
                          Expect{PlantKind::lemma31_single_part, LayerCase::single_part, 4},
                          Expect{PlantKind::lemma31_prism, LayerCase::prism, 4},
                          Expect{PlantKind::extension_branch, LayerCase::single_part, 4}}) {
        Graph g = planted_instance(e.kind);
        CHECK_FALSE(find_bull(g).has_value());
        CHECK_FALSE(find_diamond(g).has_value());
        CliqueLayering L = clique_layering(g, max_clique(g));
        CHECK(L.kind == e.layer_case);
        CHECK(chromatic_number_exact(g).first == e.palette);
    }

    Graph case1 = planted_instance(PlantKind::p6_case1);
    ClassReport rep1 = classify(case1, 6);
    CHECK(rep1.bull_free());
    CHECK(rep1.diamond_free());
    CHECK(rep1.pt_free(6));
    CHECK(rep1.omega == 3);
    CliqueLayering L1 = clique_layering(case1, max_clique(case1));
    CHECK(L1.kind == LayerCase::single_part);
    CHECK(L1.depth() == 3); // reaches N_3

    Graph case2 = planted_instance(PlantKind::p6_case2);
    ClassReport rep2 = classify(case2, 6);
    CHECK(rep2.bull_free());
    CHECK(rep2.diamond_free());
    CHECK(rep2.pt_free(6));
    CHECK(rep2.omega == 3);
    CHECK(clique_layering(case2, max_clique(case2)).kind == LayerCase::two_part);

    Graph layered = planted_instance(PlantKind::p7_layers);
    ClassReport rep7 = classify(layered, 7);
    CHECK(rep7.bull_free());
    CHECK(rep7.diamond_free());
    CHECK(rep7.pt_free(7));
    CHECK_FALSE(rep7.pt_free(6)); // genuinely needs the P_7 theorem
    CHECK(clique_layering(layered, max_clique(layered)).depth() == 4);
}

TEST_CASE("distinct seeds give distinct graphs somewhere in a stream") {
    int distinct = 0;
    Graph first = sample({12, 0.3, {Pattern::bull, Pattern::diamond}, mix_seed(3, 0), 64, false});
    for (uint64_t i = 1; i < 10; ++i) {
        Graph g = sample({12, 0.3, {Pattern::bull, Pattern::diamond}, mix_seed(3, i), 64, false});
        if (!(g == first)) ++distinct;
    }
    CHECK(distinct >= 8);
}
