#include "chibound/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>

#include "chibound/errors.hpp"

namespace chibound {

int Coloring::max_color_used() const {
    int m = 0;
    for (int c : assignment) m = std::max(m, c);
    return m;
}

ColoringViolations verify_coloring(const Graph& g, const Coloring& c) {
    ColoringViolations out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (v >= (int)c.assignment.size() || c.assignment[v] <= 0) out.uncolored.push_back(v);
    }
    for (auto [u, v] : g.edges())
        if (u < (int)c.assignment.size() && v < (int)c.assignment.size() && c.assignment[u] > 0 &&
            c.assignment[u] == c.assignment[v])
            out.monochromatic_edges.emplace_back(u, v);
    return out;
}

int desk_limit() {
    static const int limit = [] {
        if (const char* env = std::getenv("CHIBOUND_DESK_LIMIT")) {
            int v = std::atoi(env);
            if (v > 0) return v;
        }
        return 40;
    }();
    return limit;
}

namespace {

struct CliqueSearch {
    const Graph& g;
    std::vector<int> best, current;

    void expand(Bitset candidates) {
        while (!candidates.empty()) {
            if ((int)current.size() + candidates.count() <= (int)best.size()) return;
            int v = candidates.first();
            current.push_back(v);
            expand(candidates & g.neighbors(v));
            if (current.size() > best.size()) best = current; // keeps first maximum found
            current.pop_back();
            candidates.reset(v);
        }
    }
};

} // namespace

VertexSet max_clique(const Graph& g) {
    CliqueSearch search{g, {}, {}};
    search.expand(Bitset::full(g.vertex_count()));
    return Bitset::of(g.vertex_count(), search.best);
}

int clique_number(const Graph& g) { return max_clique(g).count(); }

namespace {

// DSATUR on one graph; colors 1..k.
Coloring dsatur_impl(const Graph& g) {
    int n = g.vertex_count();
    Coloring c;
    c.assignment.assign(n, 0);
    c.certificate = "dsatur";
    std::vector<Bitset> seen(n, Bitset(n + 2)); // colors adjacent to v (1-based)
    for (int step = 0; step < n; ++step) {
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (c.assignment[v] != 0) continue;
            int sat = seen[v].count(), deg = g.degree(v);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        int color = 1;
        while (seen[pick].test(color)) ++color;
        c.assignment[pick] = color;
        c.palette = std::max(c.palette, color);
        g.neighbors(pick).for_each([&](int u) {
            if (color < seen[u].universe()) seen[u].set(color);
        });
    }
    return c;
}

// Backtracking k-colorability with dynamic saturation order and
// smallest-color-first branching; new colors are introduced in index order.
bool k_colorable(const Graph& g, int k, std::vector<int>& out) {
    int n = g.vertex_count();
    std::vector<int> color(n, 0);
    std::vector<Bitset> seen(n, Bitset(k + 2));

    std::function<bool(int, int)> assign = [&](int done, int used) {
        if (done == n) return true;
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] != 0) continue;
            int sat = seen[v].count(), deg = g.degree(v);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        int try_up_to = std::min(k, used + 1); // color symmetry: at most one fresh color
        for (int col = 1; col <= try_up_to; ++col) {
            if (seen[pick].test(col)) continue;
            color[pick] = col;
            std::vector<int> touched;
            g.neighbors(pick).for_each([&](int u) {
                if (color[u] == 0 && !seen[u].test(col)) {
                    seen[u].set(col);
                    touched.push_back(u);
                }
            });
            if (assign(done + 1, std::max(used, col))) return true;
            for (int u : touched) seen[u].reset(col);
            color[pick] = 0;
        }
        return false;
    };

    if (!assign(0, 0)) return false;
    out = color;
    return true;
}

std::pair<int, Coloring> chi_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return {0, Coloring{{}, 0, "exact"}};
    int lb = clique_number(g);
    Coloring greedy = dsatur_impl(g);
    int ub = greedy.palette;
    if (lb == ub) {
        greedy.certificate = "exact";
        return {lb, greedy};
    }
    for (int k = lb; k < ub; ++k) {
        std::vector<int> col;
        if (k_colorable(g, k, col)) {
            Coloring c;
            c.assignment = col;
            c.palette = k;
            c.certificate = "exact";
            return {k, c};
        }
    }
    greedy.certificate = "exact";
    return {ub, greedy};
}

} // namespace

Coloring dsatur(const Graph& g) { return dsatur_impl(g); }

std::pair<int, Coloring> chromatic_number_exact(const Graph& g, std::optional<int> limit_opt) {
    int limit = limit_opt.value_or(desk_limit());
    if (g.vertex_count() > limit)
        throw DeskLimitExceeded("chromatic_number_exact is capped at " + std::to_string(limit) +
                                    " vertices (got " + std::to_string(g.vertex_count()) +
                                    "); raise CHIBOUND_DESK_LIMIT to override",
                                limit);
    Coloring result;
    result.assignment.assign(g.vertex_count(), 0);
    result.certificate = "exact";
    int chi = 0;
    for (const auto& comp : connected_components(g)) {
        std::vector<int> old_labels;
        Graph sub = g.induced(comp, &old_labels);
        auto [k, coloring] = chi_connected(sub);
        for (int i = 0; i < sub.vertex_count(); ++i)
            result.assignment[old_labels[i]] = coloring.assignment[i];
        chi = std::max(chi, k);
    }
    result.palette = chi;
    return {chi, result};
}

} // namespace chibound
