#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chibound/graph.hpp"

namespace chibound {

/// A total vertex coloring with colors 1..palette (0 = uncolored) plus a tag
/// naming the algorithm or theorem that produced it.
struct Coloring {
    std::vector<int> assignment;
    int palette = 0;
    std::string certificate;

    int color(int v) const { return assignment[v]; }
    int max_color_used() const;
};

struct ColoringViolations {
    std::vector<std::pair<int, int>> monochromatic_edges;
    std::vector<int> uncolored;
    bool ok() const { return monochromatic_edges.empty() && uncolored.empty(); }
};

ColoringViolations verify_coloring(const Graph& g, const Coloring& c);

/// Size cap for the exact oracles; CHIBOUND_DESK_LIMIT overrides the default
/// of 40. Runtime is exponential in the worst case.
int desk_limit();

/// A maximum clique, found by branch and bound over neighbor bitsets.
VertexSet max_clique(const Graph& g);
int clique_number(const Graph& g);

/// Exact chromatic number with a witness coloring. Branch and bound: clique
/// lower bound, DSATUR upper bound, saturation-ordered backtracking with
/// smallest-color-first branching. Deterministic. Rejects graphs larger than
/// `limit` (default: desk_limit()).
std::pair<int, Coloring> chromatic_number_exact(const Graph& g, std::optional<int> limit = std::nullopt);

/// DSATUR greedy heuristic; proper but not necessarily optimal.
Coloring dsatur(const Graph& g);

} // namespace chibound
