#include "chibound/gen.hpp"

#include <algorithm>
#include <sstream>

#include "chibound/errors.hpp"

namespace chibound {

uint64_t SplitMix64::next() {
    state += 0x9E3779B97F4A7C15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double SplitMix64::next_unit() { return (double)(next() >> 11) * 0x1.0p-53; }

uint64_t SplitMix64::next_below(uint64_t bound) { return next() % bound; }

uint64_t mix_seed(uint64_t seed, uint64_t tag) {
    SplitMix64 rng(seed ^ (tag * 0x9E3779B97F4A7C15ull));
    return rng.next();
}

namespace {

// Lexicographically smallest edge of g inside the witness set. Induced
// patterns carry at least one edge whenever repair is invoked.
std::pair<int, int> smallest_witness_edge(const Graph& g, const std::vector<int>& witness) {
    std::vector<int> vs = witness;
    std::sort(vs.begin(), vs.end());
    for (size_t a = 0; a < vs.size(); ++a)
        for (size_t b = a + 1; b < vs.size(); ++b)
            if (g.adjacent(vs[a], vs[b])) return {vs[a], vs[b]};
    throw Error("witness carries no edge; nothing to repair");
}

Graph er_draw(int n, double p, SplitMix64& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_unit() < p) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph repair(Graph g, const std::vector<Pattern>& family) {
    while (true) {
        bool hit = false;
        for (Pattern p : family) {
            if (auto w = find_pattern(g, p)) {
                auto [a, b] = smallest_witness_edge(g, *w);
                auto edges = g.edges();
                edges.erase(std::remove(edges.begin(), edges.end(), std::make_pair(a, b)), edges.end());
                g = Graph::from_edges(g.vertex_count(), edges);
                hit = true;
                break;
            }
        }
        if (!hit) return g;
    }
}

} // namespace

Graph sample(const SamplerSpec& spec) {
    if (spec.n < 1) throw Error("sample: n >= 1 required");
    if (spec.p < 0.0 || spec.p > 1.0) throw Error("sample: p in [0, 1] required");
    for (int attempt = 0; attempt < spec.max_attempts; ++attempt) {
        SplitMix64 rng(mix_seed(spec.seed, (uint64_t)attempt));
        Graph g = repair(er_draw(spec.n, spec.p, rng), spec.family);
        if (spec.connect && !is_connected(g)) continue;
        for (Pattern p : spec.family)
            if (find_pattern(g, p))
                throw Error("sample: repair left a forbidden " + pattern_name(p));
        return g;
    }
    std::ostringstream msg;
    msg << "sample: no admissible graph after " << spec.max_attempts << " attempts (n=" << spec.n
        << ", p=" << spec.p << ", seed=" << spec.seed << "); lower p or n";
    throw Error(msg.str());
}

std::string plant_name(PlantKind kind) {
    switch (kind) {
        case PlantKind::lemma31_two_part: return "lemma31_two_part";
        case PlantKind::lemma31_single_part: return "lemma31_single_part";
        case PlantKind::lemma31_prism: return "lemma31_prism";
        case PlantKind::extension_branch: return "extension_branch";
        case PlantKind::p6_case1: return "p6_case1";
        case PlantKind::p6_case2: return "p6_case2";
        case PlantKind::p7_layers: return "p7_layers";
    }
    return "?";
}

Graph planted_instance(PlantKind kind) {
    switch (kind) {
        case PlantKind::lemma31_two_part:
            // K_3 {0,1,2}, pendant 3 at 0, pendant 4 at 1, pendants adjacent.
            return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}, {3, 4}});
        case PlantKind::lemma31_single_part:
            // K_4 {0..3} with a pendant at 0.
            return Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}});
        case PlantKind::lemma31_prism:
            return named::prism(4);
        case PlantKind::extension_branch:
            // K_4 {0..3}; W_1 = {4, 5} at vertex 0; the triangle {6,7,8} in
            // N_2 attaches fully to 4 and only once to 5, so the extension
            // sees a private neighbor outside the attachment set.
            return Graph::from_edges(9, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                                         {0, 4}, {0, 5},
                                         {6, 7}, {6, 8}, {7, 8},
                                         {4, 6}, {4, 7}, {4, 8}, {5, 6}});
        case PlantKind::p6_case1:
            // Triangle {0,1,2}; W_1 = {3} u {4,5} (an edge); N_2 = {6} on the
            // singleton; N_3 = {7,8}, a K_2 sharing the lone N_2 neighbor.
            return Graph::from_edges(9, {{0, 1}, {1, 2}, {2, 0},
                                         {0, 3}, {0, 4}, {0, 5}, {4, 5},
                                         {3, 6}, {6, 7}, {6, 8}, {7, 8}});
        case PlantKind::p6_case2:
            // Triangle {0,1,2}; W_1 = {3}, W_2 = {4}, joined; N_2 = {5} seeing
            // both parts and nothing else (the forced degree-2 shape).
            return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0},
                                         {0, 3}, {1, 4}, {3, 4}, {3, 5}, {4, 5}});
        case PlantKind::p7_layers:
            // Triangle {0,1,2} with a tail 0-3-4-5-6 reaching N_4.
            return Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 5}, {5, 6}});
    }
    throw Error("unknown planted instance");
}

} // namespace chibound
