#include <doctest.h>

#include "chibound/coloring.hpp"
#include "chibound/decomposition.hpp"
#include "chibound/errors.hpp"
#include "chibound/gen.hpp"
#include "chibound/graph.hpp"
#include "chibound/oracle.hpp"
#include "chibound/recognition.hpp"

using namespace chibound;

namespace {

std::vector<int> random_perm(int n, uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[(int)rng.next_below(i + 1)]);
    return perm;
}

// K_5 with both W parts populated and a triangle in N_2 whose attachment set
// is the N_1 edge {5, 6}: the extension must work under a two-vertex
// attachment.
Graph edge_attachment_instance() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) e.emplace_back(i, j);
    e.emplace_back(0, 5); // W_1
    e.emplace_back(1, 6); // W_2
    e.emplace_back(5, 6);
    for (int c : {7, 8, 9}) {
        e.emplace_back(5, c);
        e.emplace_back(6, c);
    }
    e.emplace_back(7, 8);
    e.emplace_back(7, 9);
    e.emplace_back(8, 9);
    return Graph::from_edges(10, e);
}

} // namespace

TEST_CASE("triangle-free colorer") {
    Coloring c5 = color_triangle_free(named::cycle(5), {TfStrategy::exact, 3});
    CHECK(c5.palette == 3);
    CHECK(verify_coloring(named::cycle(5), c5).ok());

    Coloring grotzsch = color_triangle_free(named::grotzsch(), {TfStrategy::exact, 4});
    CHECK(grotzsch.palette == 4); // = chi, within the t-2 = 4 budget at t = 6

    for (TfStrategy s : {TfStrategy::exact, TfStrategy::dsatur_checked}) {
        Coloring cb = color_triangle_free(named::complete_bipartite(3, 3), {s, 2});
        CHECK(cb.palette == 2);
        CHECK(verify_coloring(named::complete_bipartite(3, 3), cb).ok());
    }

    CHECK_THROWS_AS(color_triangle_free(named::paw(), {TfStrategy::exact, 3}), ClassViolation);
    // budget the class cannot meet
    CHECK_THROWS_AS(color_triangle_free(named::grotzsch(), {TfStrategy::exact, 3}), Error);
}

TEST_CASE("dsatur_checked falls back to exact when it busts the budget") {
    // exact chromatic number of the Grotzsch graph is 4; a dsatur run may use
    // more, the checked strategy must still land within the budget
    Coloring c = color_triangle_free(named::grotzsch(), {TfStrategy::dsatur_checked, 4});
    CHECK(c.palette <= 4);
    CHECK(verify_coloring(named::grotzsch(), c).ok());
}

TEST_CASE("prism colorer") {
    Graph prism3 = named::prism(3);
    CliqueLayering L3 = clique_layering(prism3, max_clique(prism3));
    Coloring c3 = color_prism_case(prism3, L3);
    CHECK(c3.palette == 3);
    CHECK(verify_coloring(prism3, c3).ok());
    // the second row is a shifted copy of the first
    for (int j = 0; j < 3; ++j) CHECK(c3.assignment[L3.clique[j]] == j + 1);

    Graph k4 = named::complete(4);
    CliqueLayering L4 = clique_layering(k4, Bitset::full(4));
    Coloring c4 = color_prism_case(k4, L4);
    CHECK(c4.palette == 4);
    CHECK(verify_coloring(k4, c4).ok());

    // prism(4) minus one second-row vertex still lands on omega colors
    VertexSet keep = Bitset::full(8);
    keep.reset(7);
    Graph dented = named::prism(4).induced(keep);
    CliqueLayering Ld = clique_layering(dented, max_clique(dented));
    CHECK(Ld.kind == LayerCase::prism);
    Coloring cd = color_prism_case(dented, Ld);
    CHECK(cd.palette == 4);
    CHECK(verify_coloring(dented, cd).ok());

    CHECK_THROWS_AS(color_prism_case(planted_instance(PlantKind::lemma31_two_part),
                                     clique_layering(planted_instance(PlantKind::lemma31_two_part),
                                                     Bitset::of(5, {0, 1, 2}))),
                    Error);
}

TEST_CASE("extension with a single attachment vertex") {
    // K_4, pendant 4 at 0, triangle {5,6,7} fully attached to 4
    Graph g = Graph::from_edges(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                                    {0, 4},
                                    {5, 6}, {5, 7}, {6, 7},
                                    {4, 5}, {4, 6}, {4, 7}});
    CliqueLayering L = clique_layering(g, Bitset::of(8, {0, 1, 2, 3}));
    Coloring partial;
    partial.assignment = {1, 2, 3, 4, 2, 0, 0, 0};
    partial.palette = 4;
    Coloring done = extend_into_clique_component(partial, Bitset::of(8, {5, 6, 7}), L, g);
    CHECK(verify_coloring(g, done).ok());
    CHECK(done.max_color_used() <= 4);
}

TEST_CASE("extension with an edge attachment (two common neighbors)") {
    Graph g = edge_attachment_instance();
    CHECK_FALSE(find_bull(g).has_value());
    CHECK_FALSE(find_diamond(g).has_value());
    CliqueLayering L = clique_layering(g, Bitset::of(10, {0, 1, 2, 3, 4}));
    CHECK(L.kind == LayerCase::two_part);
    Coloring partial;
    partial.assignment = {1, 2, 3, 4, 5, 2, 1, 0, 0, 0};
    partial.palette = 5;
    Coloring done = extend_into_clique_component(partial, Bitset::of(10, {7, 8, 9}), L, g);
    CHECK(verify_coloring(g, done).ok());
    CHECK(done.max_color_used() <= 5);
}

TEST_CASE("extension rejects components outside its contract") {
    Graph g = planted_instance(PlantKind::extension_branch);
    CliqueLayering L = clique_layering(g, Bitset::of(9, {0, 1, 2, 3}));
    Coloring partial;
    partial.assignment = {1, 2, 3, 4, 2, 2, 0, 0, 0};
    partial.palette = 4;
    // not a triangle component
    CHECK_THROWS_AS(extend_into_clique_component(partial, Bitset::of(9, {4, 5}), L, g),
                    ClassViolation);
}

TEST_CASE("extension on the private-neighbor instance") {
    Graph g = planted_instance(PlantKind::extension_branch);
    CHECK_FALSE(find_bull(g).has_value());
    CHECK_FALSE(find_diamond(g).has_value());
    CliqueLayering L = clique_layering(g, Bitset::of(9, {0, 1, 2, 3}));
    CHECK(L.kind == LayerCase::single_part);
    Coloring partial;
    partial.assignment = {1, 2, 3, 4, 2, 2, 0, 0, 0};
    partial.palette = 4;
    Coloring done = extend_into_clique_component(partial, Bitset::of(9, {6, 7, 8}), L, g);
    CHECK(verify_coloring(g, done).ok());
    CHECK(done.max_color_used() <= 4);
}

TEST_CASE("main pipeline on named graphs") {
    reset_extension_fallback_count();

    auto [gc, gcert] = color_bull_diamond(named::grotzsch(), {TfStrategy::exact, std::nullopt});
    CHECK(gc.palette == 4);
    CHECK(gcert.theorem == "triangle_free");
    CHECK(verify_coloring(named::grotzsch(), gc).ok());

    auto [pc, pcert] = color_bull_diamond(named::prism(5), {TfStrategy::exact, std::nullopt});
    CHECK(pc.palette == 5);
    CHECK(pcert.theorem == "prism");
    CHECK(verify_coloring(named::prism(5), pc).ok());

    auto [ec, ecert] = color_bull_diamond(planted_instance(PlantKind::extension_branch),
                                          {TfStrategy::exact, std::nullopt});
    CHECK(ecert.theorem == "thm32");
    CHECK(ec.palette <= ecert.claimed_bound);
    CHECK(verify_coloring(planted_instance(PlantKind::extension_branch), ec).ok());

    CHECK_THROWS_AS(color_bull_diamond(named::bull(), {TfStrategy::exact, std::nullopt}),
                    ClassViolation);
    CHECK_THROWS_AS(color_bull_diamond(named::diamond(), {TfStrategy::exact, std::nullopt}),
                    ClassViolation);
    CHECK(extension_fallback_count() == 0);
}

TEST_CASE("main pipeline property run") {
    reset_extension_fallback_count();
    for (uint64_t seed = 0; seed < 150; ++seed) {
        SamplerSpec spec{6 + (int)(seed % 10), seed % 3 == 2 ? 0.95 : 0.35,
                         {Pattern::bull, Pattern::diamond}, 30000 + seed, 400, true};
        Graph g = sample(spec);
        auto [col, cert] = color_bull_diamond(g, {TfStrategy::exact, std::nullopt});
        CHECK(verify_coloring(g, col).ok());
        CHECK(col.palette <= cert.claimed_bound);
        CHECK(chromatic_number_exact(g).first <= col.palette);
        // dsatur-backed run obeys the same contract
        auto [col2, cert2] = color_bull_diamond(g, {TfStrategy::dsatur_checked, cert.k_used});
        CHECK(verify_coloring(g, col2).ok());
        CHECK(col2.palette <= std::max(2 * *cert2.k_used, cert2.omega));
    }
    CHECK(extension_fallback_count() == 0);
}

TEST_CASE("p5 colorer") {
    auto [c5, cert5] = color_p5(named::cycle(5));
    CHECK(c5.palette == 3);
    CHECK(cert5.theorem == "cor_p5");
    CHECK(cert5.claimed_bound == 3);

    auto [k4, cert4] = color_p5(named::complete(4));
    CHECK(k4.palette == 4);

    CHECK_THROWS_AS(color_p5(named::path(5)), ClassViolation); // P_5 itself

    for (uint64_t seed = 0; seed < 40; ++seed) {
        SamplerSpec spec{7 + (int)(seed % 6), 0.85, {Pattern::p5, Pattern::bull, Pattern::diamond},
                         31000 + seed, 400, true};
        Graph g = sample(spec);
        auto [col, cert] = color_p5(g);
        CHECK(verify_coloring(g, col).ok());
        CHECK(col.palette <= std::max(3, cert.omega));
        if (cert.omega >= 3) {
            CHECK(is_perfect(g).perfect);
            CHECK(col.palette == cert.omega);
        }
    }
}

TEST_CASE("p6 colorer cases") {
    auto [gc, gcert] = color_p6(named::grotzsch());
    CHECK(gc.palette <= 4);
    CHECK(gcert.theorem == "cor_p6_omega2");

    auto [pc, pcert] = color_p6(named::prism(4));
    CHECK(pc.palette == 4);
    CHECK(pcert.theorem == "thm_p6_big");
    CHECK(verify_coloring(named::prism(4), pc).ok());

    Graph case1 = planted_instance(PlantKind::p6_case1);
    auto [c1, cert1] = color_p6(case1);
    CHECK(c1.palette == 3);
    CHECK(cert1.theorem == "thm_p6_omega3");
    CHECK(verify_coloring(case1, c1).ok());

    Graph case2 = planted_instance(PlantKind::p6_case2);
    auto [c2, cert2] = color_p6(case2);
    CHECK(c2.palette == 3);
    CHECK(verify_coloring(case2, c2).ok());

    CHECK_THROWS_AS(color_p6(named::path(6)), ClassViolation);

    for (uint64_t seed = 0; seed < 40; ++seed) {
        SamplerSpec spec{6 + (int)(seed % 5), seed % 2 ? 0.5 : 0.92,
                         {Pattern::p6, Pattern::bull, Pattern::diamond}, 32000 + seed, 400, true};
        Graph g = sample(spec);
        int omega = clique_number(g);
        auto [col, cert] = color_p6(g);
        CHECK(verify_coloring(g, col).ok());
        if (omega == 2) CHECK(col.palette <= 4);
        if (omega == 3) CHECK(col.palette == 3);
        if (omega >= 4) CHECK(col.palette == omega);
    }
}

TEST_CASE("p7 colorer") {
    auto [c7, cert7] = color_p7(named::cycle(7));
    CHECK(c7.palette == 3); // triangle-free branch is exact
    CHECK(cert7.claimed_bound == 7);

    auto [pr, prcert] = color_p7(named::prism(8));
    CHECK(pr.palette == 8);
    CHECK(verify_coloring(named::prism(8), pr).ok());

    Graph layered = planted_instance(PlantKind::p7_layers);
    auto [lc, lcert] = color_p7(layered);
    CHECK(verify_coloring(layered, lc).ok());
    CHECK(lc.palette == 3);
    CHECK(lcert.claimed_bound == 7);

    CHECK_THROWS_AS(color_p7(named::path(7)), ClassViolation);

    for (uint64_t seed = 0; seed < 40; ++seed) {
        SamplerSpec spec{6 + (int)(seed % 6), seed % 2 ? 0.45 : 0.92,
                         {Pattern::p7, Pattern::bull, Pattern::diamond}, 33000 + seed, 400, true};
        Graph g = sample(spec);
        auto [col, cert] = color_p7(g);
        CHECK(verify_coloring(g, col).ok());
        CHECK(col.palette <= std::max(7, cert.omega));
    }
}

TEST_CASE("dispatcher routes to the most specific theorem") {
    auto [c5, cert5] = color_dispatch(named::cycle(5));
    CHECK(cert5.theorem == "cor_p5");
    CHECK(c5.palette == 3);

    auto [gc, gcert] = color_dispatch(named::grotzsch());
    CHECK(gcert.theorem == "cor_p6_omega2"); // P_5 present, P_6 absent
    CHECK(gc.palette <= 4);

    Graph layered = planted_instance(PlantKind::p7_layers);
    CHECK(color_dispatch(layered).second.theorem == "thm_p7");

    // a triangle with a six-edge tail holds an induced P_7: the general bound
    Graph long_tail = Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}});
    auto [lt, ltcert] = color_dispatch(long_tail);
    CHECK(ltcert.theorem == "thm32");
    CHECK(verify_coloring(long_tail, lt).ok());

    CHECK_THROWS_AS(color_dispatch(named::bull()), ClassViolation);
}

TEST_CASE("disconnected inputs color per component") {
    // K_4 plus a far C_5: omega 4, chi 4
    std::vector<std::pair<int, int>> e = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    for (int i = 0; i < 5; ++i) e.emplace_back(4 + i, 4 + (i + 1) % 5);
    Graph g = Graph::from_edges(9, e);
    auto [col, cert] = color_bull_diamond(g, {TfStrategy::exact, std::nullopt});
    CHECK(verify_coloring(g, col).ok());
    CHECK(col.palette == 4);

    auto [d, dcert] = color_dispatch(g);
    CHECK(verify_coloring(g, d).ok());
    CHECK(d.palette <= dcert.claimed_bound);
}

TEST_CASE("palette size is invariant under relabeling") {
    for (uint64_t seed = 0; seed < 25; ++seed) {
        SamplerSpec spec{9, seed % 2 ? 0.4 : 0.9, {Pattern::bull, Pattern::diamond},
                         34000 + seed, 400, true};
        Graph g = sample(spec);
        Graph h = g.relabeled(random_perm(9, 600 + seed));
        auto a = color_bull_diamond(g, {TfStrategy::exact, std::nullopt});
        auto b = color_bull_diamond(h, {TfStrategy::exact, std::nullopt});
        CHECK(a.first.palette == b.first.palette);
    }
}

TEST_CASE("layer color windows in the theorem output") {
    Graph g = planted_instance(PlantKind::extension_branch);
    auto [col, cert] = color_bull_diamond(g, {TfStrategy::exact, std::nullopt});
    CliqueLayering L = clique_layering(g, max_clique(g));
    int k = *cert.k_used;
    for (int i = 2; i <= L.depth(); ++i) {
        std::vector<int> labels;
        Graph sub = g.induced(L.layer(i), &labels);
        for (const auto& comp : connected_components(sub)) {
            if (find_triangle(sub.induced(comp))) continue;
            for (int v = comp.first(); v >= 0; v = comp.next(v)) {
                int c = col.assignment[labels[v]];
                if (i % 2 == 0) {
                    CHECK(c >= k + 1);
                    CHECK(c <= 2 * k);
                } else {
                    CHECK(c >= 1);
                    CHECK(c <= k);
                }
            }
        }
    }
}
