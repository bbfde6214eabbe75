#include "chibound/decomposition.hpp"

#include <algorithm>
#include <sstream>

#include "chibound/errors.hpp"
#include "chibound/oracle.hpp"
#include "chibound/recognition.hpp"

namespace chibound {

std::string layer_case_name(LayerCase c) {
    switch (c) {
        case LayerCase::empty_n1: return "empty_n1";
        case LayerCase::prism: return "prism_case";
        case LayerCase::two_part: return "two_part";
        case LayerCase::single_part: return "single_part";
    }
    return "?";
}

VertexSet CliqueLayering::layer(int i) const {
    if (i >= 1 && i <= (int)layers.size()) return layers[i - 1];
    return VertexSet(clique.empty() ? 0 : layers.empty() ? (int)clique.size() : layers[0].universe());
}

namespace {

[[noreturn]] void claim_failed(const std::string& what, const std::vector<int>& vertices) {
    std::ostringstream msg;
    msg << "structural claim failed: " << what << "; vertices:";
    for (int v : vertices) msg << " " << v;
    throw ProofClaimFailure(msg.str());
}

bool induces_clique(const Graph& g, const VertexSet& s) {
    for (int v = s.first(); v >= 0; v = s.next(v))
        if (g.neighbors(v).intersect_count(s) != s.count() - 1) return false;
    return true;
}

bool set_independent(const Graph& g, const VertexSet& s) {
    for (int v = s.first(); v >= 0; v = s.next(v))
        if (g.neighbors(v).intersects(s)) return false;
    return true;
}

bool join_complete(const Graph& g, const VertexSet& a, const VertexSet& b) {
    for (int v = a.first(); v >= 0; v = a.next(v))
        if (g.neighbors(v).intersect_count(b) != b.count()) return false;
    return true;
}

} // namespace

CliqueLayering clique_layering(const Graph& g, const VertexSet& k) {
    int n = g.vertex_count();
    if (!is_connected(g)) throw ClassViolation("clique_layering requires a connected graph", {});
    if (auto w = find_bull(g)) throw ClassViolation("input contains an induced bull", *w);
    if (auto w = find_diamond(g)) throw ClassViolation("input contains an induced diamond", *w);

    std::vector<int> kv = k.to_vector();
    for (size_t a = 0; a < kv.size(); ++a)
        for (size_t b = a + 1; b < kv.size(); ++b)
            if (!g.adjacent(kv[a], kv[b]))
                throw ClassViolation("K is not a clique", {kv[a], kv[b]});
    int omega = clique_number(g);
    if ((int)kv.size() != omega) {
        std::ostringstream msg;
        msg << "K has " << kv.size() << " vertices but the clique number is " << omega;
        throw ClassViolation(msg.str(), kv);
    }
    if (omega <= 2) throw ClassViolation("clique_layering requires omega > 2", kv);

    std::vector<int> dist = bfs_layers(g, k);
    int depth = 0;
    for (int v = 0; v < n; ++v) depth = std::max(depth, dist[v]);

    CliqueLayering out;
    out.layers.assign(depth, VertexSet(n));
    for (int v = 0; v < n; ++v)
        if (dist[v] >= 1) out.layers[dist[v] - 1].set(v);

    // Every N_1 vertex sees exactly one K vertex; more would force a diamond
    // or a larger clique, both excluded above.
    std::vector<VertexSet> raw(kv.size(), VertexSet(n));
    if (depth >= 1)
        out.layers[0].for_each([&](int x) {
            Bitset in_k = g.neighbors(x) & k;
            if (in_k.count() != 1) {
                std::vector<int> w = in_k.to_vector();
                w.push_back(x);
                claim_failed("an N_1 vertex with several K-neighbors survived the class checks", w);
            }
            int anchor = in_k.first();
            for (size_t i = 0; i < kv.size(); ++i)
                if (kv[i] == anchor) raw[i].set(x);
        });

    // Canonical order: K vertices owning nonempty parts first, each group in
    // ascending original label, so the nonempty parts are W(1), W(2), ...
    std::vector<int> order(kv.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return !raw[a].empty() && raw[b].empty(); });
    out.clique.resize(kv.size());
    out.wpart.resize(kv.size());
    int nonempty = 0;
    for (size_t i = 0; i < order.size(); ++i) {
        out.clique[i] = kv[order[i]];
        out.wpart[i] = raw[order[i]];
        if (!out.wpart[i].empty()) ++nonempty;
    }

    if (depth == 0) {
        out.kind = LayerCase::empty_n1;
        return out;
    }
    if (nonempty >= 3) {
        out.kind = LayerCase::prism;
        // Facts forced by the class: every part a singleton, N_1 u N_2 a
        // clique, nothing at distance three.
        for (int i = 0; i < (int)out.wpart.size(); ++i)
            if (out.wpart[i].count() > 1)
                claim_failed("prism case: part W(" + std::to_string(i + 1) + ") is not a singleton",
                             out.wpart[i].to_vector());
        VertexSet n12 = out.layer(1) | out.layer(2);
        if (!induces_clique(g, n12))
            claim_failed("prism case: N_1 u N_2 is not a clique", n12.to_vector());
        if (depth > 2) claim_failed("prism case: N_3 is nonempty", out.layer(3).to_vector());
        return out;
    }
    if (nonempty == 2) {
        out.kind = LayerCase::two_part;
        out.part_i = 1;
        out.part_j = 2;
        if (!set_independent(g, out.wpart[0]))
            claim_failed("two-part case: W(1) is not independent", out.wpart[0].to_vector());
        if (!set_independent(g, out.wpart[1]))
            claim_failed("two-part case: W(2) is not independent", out.wpart[1].to_vector());
        if (!join_complete(g, out.wpart[0], out.wpart[1]))
            claim_failed("two-part case: [W(1), W(2)] is not complete",
                         (out.wpart[0] | out.wpart[1]).to_vector());
        return out;
    }
    out.kind = LayerCase::single_part;
    out.part_i = 1;
    for (const auto& comp : connected_components(g.induced(out.layer(1)))) {
        Graph sub = g.induced(out.layer(1));
        if (!induces_clique(sub, comp))
            claim_failed("single-part case: G[N_1] has a non-clique component",
                         out.layer(1).to_vector());
    }
    return out;
}

namespace {

void check_layer_components(const Graph& g, const CliqueLayering& L, Lemma31Report& report) {
    for (int i = 2; i <= L.depth(); ++i) {
        std::vector<int> labels;
        Graph sub = g.induced(L.layer(i), &labels);
        for (const auto& comp : connected_components(sub)) {
            Graph comp_graph = sub.induced(comp);
            bool has_triangle = find_triangle(comp_graph).has_value();
            std::vector<int> members;
            comp.for_each([&](int v) { members.push_back(labels[v]); });
            if (has_triangle && !induces_clique(sub, comp)) {
                report.clause_ii.holds = false;
                report.clause_ii.detail =
                    "component of N_" + std::to_string(i) + " has a triangle but is not a clique";
                report.clause_ii.witness = members;
                return;
            }
            if (has_triangle && i < L.depth()) {
                VertexSet next = L.layer(i + 1);
                for (int v : members)
                    if (g.neighbors(v).intersects(next)) {
                        report.clause_iii.holds = false;
                        report.clause_iii.detail = "triangle component of N_" + std::to_string(i) +
                                                   " touches N_" + std::to_string(i + 1);
                        report.clause_iii.witness = members;
                        return;
                    }
            }
        }
    }
}

} // namespace

Lemma31Report verify_lemma31(const Graph& g, const CliqueLayering& L) {
    Lemma31Report report;
    report.clause_i.detail = "N_1 case split";
    report.clause_ii.detail = "layer components are cliques or triangle-free";
    report.clause_iii.detail = "triangle components stop the layering";

    // (i): parts partition N_1 and match the declared case.
    VertexSet covered(g.vertex_count());
    int nonempty = 0;
    for (const auto& w : L.wpart) {
        covered |= w;
        if (!w.empty()) ++nonempty;
    }
    bool i_ok = covered == L.layer(1);
    switch (L.kind) {
        case LayerCase::empty_n1: i_ok = i_ok && L.depth() == 0; break;
        case LayerCase::prism: i_ok = i_ok && nonempty >= 3 && L.depth() <= 2; break;
        case LayerCase::two_part:
            i_ok = i_ok && nonempty == 2 && set_independent(g, L.wpart[0]) &&
                   set_independent(g, L.wpart[1]) && join_complete(g, L.wpart[0], L.wpart[1]);
            break;
        case LayerCase::single_part: {
            i_ok = i_ok && nonempty == 1;
            if (i_ok) {
                Graph sub = g.induced(L.layer(1));
                for (const auto& comp : connected_components(sub))
                    i_ok = i_ok && induces_clique(sub, comp);
            }
            break;
        }
    }
    if (!i_ok) {
        report.clause_i.holds = false;
        report.clause_i.detail = "declared case " + layer_case_name(L.kind) +
                                 " does not match the N_1 structure";
        report.clause_i.witness = L.layer(1).to_vector();
        if (auto w = find_diamond(g)) {
            report.clause_i.detail += "; induced diamond present";
            report.clause_i.witness = *w;
        } else if (auto w = find_bull(g)) {
            report.clause_i.detail += "; induced bull present";
            report.clause_i.witness = *w;
        }
    }

    check_layer_components(g, L, report);
    return report;
}

} // namespace chibound
