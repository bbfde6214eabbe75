#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "chibound/decomposition.hpp"
#include "chibound/graph.hpp"
#include "chibound/oracle.hpp"

namespace chibound {

// Subroutine contract for coloring triangle-free pieces. `exact` always
// achieves the chromatic number; `dsatur_checked` runs the heuristic and
// falls back to exact whenever it exceeds the claimed budget. Output is
// verified proper before use either way.
enum class TfStrategy { exact, dsatur_checked };

struct TriangleFreeColorer {
    TfStrategy strategy = TfStrategy::exact;
    // Color budget the strategy promises on the target class. Empty means
    // "derive the minimal valid budget from the instance" (exact only).
    std::optional<int> claimed_k;
};

/// Which theorem produced a coloring and what bound it claims.
struct BoundCertificate {
    std::string theorem; // thm32 | cor_p5 | thm_p6_big | thm_p6_omega3 | cor_p6_omega2 | thm_p7 | cor38 | prism | triangle_free
    int claimed_bound = 0;
    int omega = 0;
    std::optional<int> k_used;
};

/// Colors a triangle-free graph. Rejects inputs with a triangle (witness
/// attached). With `exact`, the palette equals the chromatic number.
Coloring color_triangle_free(const Graph& g, const TriangleFreeColorer& tf);

/// The K_w x K_2 case: v_i gets color i and the second row receives a
/// column assignment (a cyclic shift for the W singletons, leftover colors
/// for the N_2 clique). Exactly omega colors. Accepts layerings with kind
/// prism or empty_n1.
Coloring color_prism_case(const Graph& g, const CliqueLayering& layering);

/// Extends `partial` (proper on K u N_1 u ... u N_{i-1} plus earlier parts of
/// N_i) to a clique component `comp` of N_i that contains a triangle, within
/// the same palette. Greedy first, then the recoloring argument (move the
/// attachment vertex's color onto its private fringe), then an instrumented
/// exact backtracking fallback over the component plus its fringe.
Coloring extend_into_clique_component(Coloring partial, const VertexSet& comp,
                                      const CliqueLayering& layering, const Graph& g);

/// Invocations of the exact fallback inside extend_into_clique_component
/// since the last reset. Nonzero indicates the recoloring argument and the
/// code disagreed on some instance.
uint64_t extension_fallback_count();
void reset_extension_fallback_count();

/// Main pipeline for (bull, diamond)-free graphs: palette at most
/// max{2k, omega}. Per component: triangle-free graphs go to the subroutine,
/// prism-shaped layerings take omega colors, and otherwise K and N_1 are
/// colored by case, triangle-free components of N_i use the color window
/// {k+1..2k} (i even) or {1..k} (i odd, i >= 3), and clique components are
/// extended in place.
std::pair<Coloring, BoundCertificate> color_bull_diamond(const Graph& g, const TriangleFreeColorer& tf);

/// (P_5, bull, diamond)-free: triangle-free graphs take at most 3 colors,
/// anything else is perfect (checked) and gets an exact omega-coloring.
std::pair<Coloring, BoundCertificate> color_p5(const Graph& g);

/// (P_6, bull, diamond)-free: 4 colors when omega = 2, the constructive
/// 3-coloring when omega = 3, and the omega-coloring pipeline when omega > 3.
std::pair<Coloring, BoundCertificate> color_p6(const Graph& g);

/// (P_7, bull, diamond)-free: at most max{7, omega} colors.
std::pair<Coloring, BoundCertificate> color_p7(const Graph& g);

/// Probes P_5/P_6/P_7-freeness and applies the most specific colorer, falling
/// back to the main pipeline with the exact strategy. Rejects graphs that are
/// not (bull, diamond)-free.
std::pair<Coloring, BoundCertificate> color_dispatch(const Graph& g);

} // namespace chibound
