#pragma once

#include <string>
#include <vector>

#include "chibound/graph.hpp"

namespace chibound {

// Layering of a connected (bull, diamond)-free graph around a maximum clique
// K = {v_1..v_w}: the distance layers N_i(K) and the partition of N_1 into
// parts W(i) = vertices whose only K-neighbor is v_i.
//
// Cases:
//   empty_n1    - N_1 empty, the graph is K alone.
//   prism       - three or more W parts nonempty; the structure collapses to
//                 a subgraph of K_w x K_2 (all parts singletons, N_1 u N_2 a
//                 clique, N_3 empty; each fact is checked at construction).
//   two_part    - exactly parts W(1), W(2) nonempty after canonicalization;
//                 both independent, joined completely.
//   single_part - only W(1) nonempty; its graph is a disjoint union of cliques.
enum class LayerCase { empty_n1, prism, two_part, single_part };

std::string layer_case_name(LayerCase c);

struct CliqueLayering {
    std::vector<int> clique;      // v_1..v_w in canonical order (nonempty W parts first)
    std::vector<VertexSet> wpart; // wpart[i-1] = W(i), indexed against `clique`
    std::vector<VertexSet> layers; // layers[i-1] = N_i; trailing layers nonempty
    LayerCase kind = LayerCase::empty_n1;
    int part_i = 0, part_j = 0;   // 1-based part indices for two_part / single_part

    int omega() const { return (int)clique.size(); }
    int depth() const { return (int)layers.size(); }
    /// N_i (1-based); an empty set past the last layer.
    VertexSet layer(int i) const;
};

/// Computes the layering. Preconditions checked with witnesses: g connected,
/// (bull, diamond)-free, K a maximum clique, omega(g) > 2.
CliqueLayering clique_layering(const Graph& g, const VertexSet& k);

struct ClauseResult {
    bool holds = true;
    std::string detail;
    std::vector<int> witness;
};

// Structural facts the coloring pipeline consumes, checked clause by clause:
//   i   - N_1 splits into at most two W parts with the stated structure;
//   ii  - every component of G[N_i], i > 1, is a clique or triangle-free;
//   iii - components of G[N_i] containing a triangle have no N_{i+1} neighbor.
struct Lemma31Report {
    ClauseResult clause_i, clause_ii, clause_iii;
    bool all_hold() const { return clause_i.holds && clause_ii.holds && clause_iii.holds; }
};

Lemma31Report verify_lemma31(const Graph& g, const CliqueLayering& layering);

} // namespace chibound
