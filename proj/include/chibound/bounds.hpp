#pragma once

#include <map>
#include <optional>
#include <string>

#include "chibound/graph.hpp"
#include "chibound/recognition.hpp"

namespace chibound {

// One evaluated closed-form bound. `value` is empty when a logarithm argument
// was <= 1 (reported as "undefined"), `applicable` records whether the
// formula's hypotheses hold for this graph, and `assertable` is false for
// asymptotic-only forms whose o(1) term cannot be pinned at finite n.
struct BoundEntry {
    std::optional<double> value;
    bool applicable = false;
    bool assertable = true;
};

struct BoundReport {
    long long n = 0, m = 0, triangles = 0;
    int max_degree = 0, omega = 0;
    bool triangle_free = false, bull_diamond_free = false;
    // key -> entry; keys: poljak_tuza, harris, cor_nm, molloy_delta
    std::map<std::string, BoundEntry> values;
};

/// Evaluates every closed-form bound with natural logarithms:
///   poljak_tuza   min{ 4 sqrt(n/ln n), 14 m^(1/3) / (ln m)^(2/3) }   (triangle-free)
///   harris        2 sqrt(n) + (6t)^(1/3)                             (any graph)
///   cor_nm        min{ 4 sqrt(n), 8 sqrt(n/ln n), 28 m^(1/3)/(ln m)^(2/3) }
///                 (bull, diamond)-free, asserted as max{omega, formula}
///   molloy_delta  2 Delta / ln Delta, asymptotic only, never asserted
BoundReport eval_bounds(const Graph& g, const ClassReport& report);

enum class TableFamily { pt, k1r, pk2, chair };

/// Looked-up chromatic bounds for (H, bull, diamond)-free classes:
///   pt(t):  t=5 -> max{3,w}; t=6 -> 4 if w=2 else w; t=7 -> max{7,w};
///           t>=8 -> max{2t-4,w}
///   k1r(r): max{6, 2r, w}          pk2(p): max{4p-4, w}       chair: max{6, w}
/// Parameter ranges enforced: t >= 5, r >= 1, p >= 1.
int table_bound(TableFamily family, int param, int omega);

} // namespace chibound
