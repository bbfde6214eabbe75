#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chibound/graph.hpp"

namespace chibound {

/// Exhaustive search for an induced copy of `pattern` in `g`. The returned
/// embedding maps pattern vertex i to g vertex embedding[i]; it is injective
/// and preserves both edges and non-edges. nullopt means no copy exists.
std::optional<std::vector<int>> contains_induced(const Graph& g, const Graph& pattern);

// Specialized detectors. Each returns the witness found first in index order
// (a deterministic, re-verifiable tuple), sorted ascending.
std::optional<std::vector<int>> find_triangle(const Graph& g);
std::optional<std::vector<int>> find_diamond(const Graph& g);
std::optional<std::vector<int>> find_paw(const Graph& g);
std::optional<std::vector<int>> find_bull(const Graph& g);

/// Vertices of some induced path on t vertices, in path order, or nullopt.
std::optional<std::vector<int>> find_induced_path(const Graph& g, int t);

/// Length (vertex count) of a longest induced path, capped at `cap`.
int longest_induced_path(const Graph& g, int cap);

/// Exact number of vertex triples inducing K_3. OpenMP-parallel.
long long count_triangles(const Graph& g);
/// Straightforward single-threaded reference for the above.
long long count_triangles_serial(const Graph& g);

// Occurrence counters used by repair-monotonicity checks.
long long count_diamonds(const Graph& g);
long long count_bulls(const Graph& g);

struct PatternHit {
    bool found = false;
    std::vector<int> witness; // sorted vertex tuple when found
};

/// Per-pattern verdicts for one graph. `omega` is delegated to the exact
/// clique oracle. Path facts are relative to the probe t: longest_induced_path
/// is capped at the probe, and p_free_from is the smallest s <= probe with G
/// P_s-free (absent when an induced P_probe exists).
struct ClassReport {
    int n = 0;
    long long m = 0;
    PatternHit bull, diamond, paw;
    long long triangle_count = 0;
    int omega = 0;
    int path_probe = 0;
    int longest_induced_path = 0;
    std::optional<int> p_free_from;

    bool bull_free() const { return !bull.found; }
    bool diamond_free() const { return !diamond.found; }
    bool paw_free() const { return !paw.found; }
    bool triangle_free() const { return triangle_count == 0; }
    /// Only meaningful for t <= path_probe.
    bool pt_free(int t) const { return longest_induced_path < t; }
};

ClassReport classify(const Graph& g, int path_probe);

struct PerfectionVerdict {
    bool perfect = false;
    std::vector<int> witness;   // odd hole / antihole vertices in cycle order
    bool in_complement = false; // witness lives in the complement (antihole)
};

/// An induced odd cycle of length >= 5, in cycle order, or nullopt after
/// exhaustive enumeration.
std::optional<std::vector<int>> find_odd_hole(const Graph& g);

/// Enumerates induced cycles of length >= min_len, calling f(cycle) for each;
/// stops early when f returns false. Each cycle is reported once.
void for_each_induced_cycle(const Graph& g, int min_len,
                            const std::function<bool(const std::vector<int>&)>& f);

/// SPGT check by exhaustive odd-hole search in G and its complement.
/// Rejects graphs larger than `limit` vertices.
PerfectionVerdict is_perfect(const Graph& g, int limit = 24);

/// Partition into independent parts with all parts pairwise complete, if one
/// exists (iff the complement is a disjoint union of cliques).
std::optional<std::vector<VertexSet>> is_complete_multipartite(const Graph& g);

bool is_bipartite(const Graph& g);
/// Two-coloring sides of a connected bipartite graph; side 0 contains the
/// smallest vertex of the component.
std::optional<std::vector<int>> bipartition_sides(const Graph& g, const VertexSet& comp);

/// First forbidden pattern found, scanning in a fixed documented order.
enum class Pattern { bull, diamond, triangle, p5, p6, p7 };
std::string pattern_name(Pattern p);
std::optional<std::vector<int>> find_pattern(const Graph& g, Pattern p);

} // namespace chibound
