#include "chibound/recognition.hpp"

#include <algorithm>
#include <functional>

#include "chibound/errors.hpp"
#include "chibound/oracle.hpp"

namespace chibound {

namespace {

std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

std::optional<std::vector<int>> contains_induced(const Graph& g, const Graph& pattern) {
    int pn = pattern.vertex_count();
    int gn = g.vertex_count();
    if (pn == 0) return std::vector<int>{};
    if (pn > gn) return std::nullopt;

    // Static placement order: seed with the max-degree pattern vertex, then
    // repeatedly take the vertex with most placed neighbors (ties: degree,
    // then index). Keeps the partial embedding constrained early.
    std::vector<int> order;
    std::vector<bool> placed(pn, false);
    for (int step = 0; step < pn; ++step) {
        int best = -1, best_conn = -1, best_deg = -1;
        for (int v = 0; v < pn; ++v) {
            if (placed[v]) continue;
            int conn = 0;
            for (int u : order) conn += pattern.adjacent(u, v) ? 1 : 0;
            int deg = pattern.degree(v);
            if (conn > best_conn || (conn == best_conn && (deg > best_deg || (deg == best_deg && best > v)))) {
                best = v;
                best_conn = conn;
                best_deg = deg;
            }
        }
        order.push_back(best);
        placed[best] = true;
    }

    std::vector<int> embed(pn, -1);
    std::vector<bool> used(gn, false);
    std::function<bool(int)> place = [&](int step) {
        if (step == pn) return true;
        int pv = order[step];
        for (int gv = 0; gv < gn; ++gv) {
            if (used[gv]) continue;
            bool ok = true;
            for (int prev = 0; prev < step && ok; ++prev) {
                int pu = order[prev];
                ok = pattern.adjacent(pu, pv) == g.adjacent(embed[pu], gv);
            }
            if (!ok) continue;
            embed[pv] = gv;
            used[gv] = true;
            if (place(step + 1)) return true;
            used[gv] = false;
            embed[pv] = -1;
        }
        return false;
    };
    if (!place(0)) return std::nullopt;
    return embed;
}

std::optional<std::vector<int>> find_triangle(const Graph& g) {
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = g.neighbors(u).next(u); v >= 0; v = g.neighbors(u).next(v)) {
            Bitset common = g.neighbors(u) & g.neighbors(v);
            int w = common.next(v);
            if (w >= 0) return std::vector<int>{u, v, w};
        }
    return std::nullopt;
}

std::optional<std::vector<int>> find_diamond(const Graph& g) {
    // Central edge (u,v) plus two non-adjacent common neighbors.
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = g.neighbors(u).next(u); v >= 0; v = g.neighbors(u).next(v)) {
            Bitset common = g.neighbors(u) & g.neighbors(v);
            if (common.count() < 2) continue;
            for (int x = common.first(); x >= 0; x = common.next(x))
                for (int y = common.next(x); y >= 0; y = common.next(y))
                    if (!g.adjacent(x, y)) return sorted({u, v, x, y});
        }
    return std::nullopt;
}

namespace {

template <class F>
void for_each_triangle(const Graph& g, F f) {
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = g.neighbors(u).next(u); v >= 0; v = g.neighbors(u).next(v)) {
            Bitset common = g.neighbors(u) & g.neighbors(v);
            for (int w = common.next(v); w >= 0; w = common.next(w))
                if (!f(u, v, w)) return;
        }
}

// Vertices adjacent to `a` and to neither b nor c.
Bitset pendants_at(const Graph& g, int a, int b, int c) {
    Bitset p = g.neighbors(a);
    Bitset block = g.neighbors(b) | g.neighbors(c);
    p.subtract(block);
    p.reset(b);
    p.reset(c);
    return p;
}

} // namespace

std::optional<std::vector<int>> find_paw(const Graph& g) {
    std::optional<std::vector<int>> hit;
    for_each_triangle(g, [&](int u, int v, int w) {
        for (int a : {u, v, w}) {
            int b = a == u ? v : u;
            int c = a == w ? v : w;
            Bitset p = pendants_at(g, a, b, c);
            if (!p.empty()) {
                hit = sorted({u, v, w, p.first()});
                return false;
            }
        }
        return true;
    });
    return hit;
}

std::optional<std::vector<int>> find_bull(const Graph& g) {
    std::optional<std::vector<int>> hit;
    for_each_triangle(g, [&](int u, int v, int w) {
        int tri[3] = {u, v, w};
        for (int i = 0; i < 3 && !hit; ++i)
            for (int j = 0; j < 3 && !hit; ++j) {
                if (i == j) continue;
                int a = tri[i], b = tri[j], c = tri[3 - i - j];
                Bitset pa = pendants_at(g, a, b, c);
                if (pa.empty()) continue;
                Bitset pb = pendants_at(g, b, a, c);
                for (int x = pa.first(); x >= 0 && !hit; x = pa.next(x)) {
                    Bitset candidates = pb;
                    candidates.subtract(g.neighbors(x));
                    candidates.reset(x);
                    if (!candidates.empty()) hit = sorted({u, v, w, x, candidates.first()});
                }
            }
        return !hit;
    });
    return hit;
}

namespace {

bool extend_path(const Graph& g, std::vector<int>& path, Bitset& blocked, int target, int* longest) {
    if (longest) *longest = std::max(*longest, (int)path.size());
    if ((int)path.size() == target) return true;
    int last = path.back();
    Bitset candidates = g.neighbors(last);
    candidates.subtract(blocked);
    bool found = false;
    candidates.for_each([&](int u) {
        if (found) return;
        path.push_back(u);
        Bitset saved = blocked;
        blocked |= g.neighbors(last);
        blocked.set(last);
        blocked.set(u);
        if (extend_path(g, path, blocked, target, longest)) {
            found = true;
        } else {
            path.pop_back();
        }
        blocked = saved;
    });
    return found;
}

} // namespace

std::optional<std::vector<int>> find_induced_path(const Graph& g, int t) {
    if (t < 1) throw Error("find_induced_path requires t >= 1");
    if (t > g.vertex_count()) return std::nullopt;
    for (int s = 0; s < g.vertex_count(); ++s) {
        std::vector<int> path{s};
        Bitset blocked(g.vertex_count());
        blocked.set(s);
        if (extend_path(g, path, blocked, t, nullptr)) return path;
    }
    return std::nullopt;
}

int longest_induced_path(const Graph& g, int cap) {
    cap = std::min(cap, g.vertex_count());
    int best = g.vertex_count() > 0 ? 1 : 0;
    for (int s = 0; s < g.vertex_count() && best < cap; ++s) {
        std::vector<int> path{s};
        Bitset blocked(g.vertex_count());
        blocked.set(s);
        if (extend_path(g, path, blocked, cap, &best)) return cap;
    }
    return best;
}

long long count_triangles_serial(const Graph& g) {
    long long total = 0;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = g.neighbors(u).next(u); v >= 0; v = g.neighbors(u).next(v))
            total += g.neighbors(u).intersect_count(g.neighbors(v));
    return total / 3;
}

long long count_triangles(const Graph& g) {
    long long total = 0;
    int n = g.vertex_count();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : total)
#endif
    for (int u = 0; u < n; ++u)
        for (int v = g.neighbors(u).next(u); v >= 0; v = g.neighbors(u).next(v))
            total += g.neighbors(u).intersect_count(g.neighbors(v));
    return total / 3;
}

long long count_diamonds(const Graph& g) {
    long long total = 0;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = g.neighbors(u).next(u); v >= 0; v = g.neighbors(u).next(v)) {
            Bitset common = g.neighbors(u) & g.neighbors(v);
            for (int x = common.first(); x >= 0; x = common.next(x))
                total += common.count() - 1 - common.intersect_count(g.neighbors(x));
        }
    // Each non-adjacent pair {x,y} over a central edge was counted twice
    // (once from x, once from y).
    return total / 2;
}

long long count_bulls(const Graph& g) {
    long long total = 0;
    for_each_triangle(g, [&](int u, int v, int w) {
        int tri[3] = {u, v, w};
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                int a = tri[i], b = tri[j], c = tri[3 - i - j];
                Bitset pa = pendants_at(g, a, b, c);
                Bitset pb = pendants_at(g, b, a, c);
                for (int x = pa.first(); x >= 0; x = pa.next(x))
                    total += pb.count() - pb.intersect_count(g.neighbors(x)) - (pb.test(x) ? 1 : 0);
            }
        return true;
    });
    return total;
}

ClassReport classify(const Graph& g, int path_probe) {
    if (path_probe < 2) throw Error("classify requires a path probe t >= 2");
    ClassReport r;
    r.n = g.vertex_count();
    r.m = g.edge_count();
    if (auto w = find_bull(g)) r.bull = {true, *w};
    if (auto w = find_diamond(g)) r.diamond = {true, *w};
    if (auto w = find_paw(g)) r.paw = {true, *w};
    r.triangle_count = count_triangles(g);
    r.omega = clique_number(g);
    r.path_probe = path_probe;
    r.longest_induced_path = longest_induced_path(g, path_probe);
    if (r.longest_induced_path < path_probe) r.p_free_from = r.longest_induced_path + 1;
    return r;
}

void for_each_induced_cycle(const Graph& g, int min_len,
                            const std::function<bool(const std::vector<int>&)>& f) {
    int n = g.vertex_count();
    std::vector<int> path;
    bool stop = false;

    // Grows induced paths whose interior avoids the neighborhood of the base
    // except at the two cycle ends; base is the minimum vertex of each cycle.
    std::function<void(Bitset&)> grow = [&](Bitset& blocked) {
        if (stop) return;
        int base = path[0], last = path.back();
        Bitset candidates = g.neighbors(last);
        candidates.subtract(blocked);
        candidates.for_each([&](int u) {
            if (stop || u <= base) return;
            if (g.adjacent(u, base)) {
                // Closing edge: cycle path + u. Interior chordlessness is
                // maintained by construction; report each cycle in one
                // direction only.
                if ((int)path.size() + 1 >= min_len && path[1] < u) {
                    path.push_back(u);
                    if (!f(path)) stop = true;
                    path.pop_back();
                }
                return; // a base-neighbor cannot be interior
            }
            path.push_back(u);
            Bitset saved = blocked;
            blocked |= g.neighbors(last);
            blocked.set(u);
            grow(blocked);
            blocked = saved;
            path.pop_back();
        });
    };

    for (int base = 0; base < n && !stop; ++base) {
        path.assign(1, base);
        Bitset blocked(n);
        blocked.set(base);
        // Second vertex; base stays unblocked logically but may not recur.
        Bitset seconds = g.neighbors(base);
        seconds.for_each([&](int second) {
            if (stop || second <= base) return;
            path.push_back(second);
            Bitset b2 = blocked;
            b2.set(second);
            grow(b2);
            path.pop_back();
        });
    }
}

std::optional<std::vector<int>> find_odd_hole(const Graph& g) {
    std::optional<std::vector<int>> hole;
    for_each_induced_cycle(g, 5, [&](const std::vector<int>& cycle) {
        if (cycle.size() % 2 == 1) {
            hole = cycle;
            return false;
        }
        return true;
    });
    return hole;
}

PerfectionVerdict is_perfect(const Graph& g, int limit) {
    if (g.vertex_count() > limit)
        throw DeskLimitExceeded("is_perfect is exhaustive and capped at " + std::to_string(limit) +
                                    " vertices (got " + std::to_string(g.vertex_count()) + ")",
                                limit);
    PerfectionVerdict v;
    if (auto hole = find_odd_hole(g)) {
        v.perfect = false;
        v.witness = *hole;
        v.in_complement = false;
        return v;
    }
    if (auto hole = find_odd_hole(g.complement())) {
        v.perfect = false;
        v.witness = *hole;
        v.in_complement = true;
        return v;
    }
    v.perfect = true;
    return v;
}

std::optional<std::vector<VertexSet>> is_complete_multipartite(const Graph& g) {
    Graph co = g.complement();
    auto comps = connected_components(co);
    for (const auto& comp : comps) {
        int size = comp.count();
        for (int v = comp.first(); v >= 0; v = comp.next(v))
            if (co.neighbors(v).intersect_count(comp) != size - 1) return std::nullopt;
    }
    return comps;
}

bool is_bipartite(const Graph& g) {
    for (const auto& comp : connected_components(g))
        if (!bipartition_sides(g, comp)) return false;
    return true;
}

std::optional<std::vector<int>> bipartition_sides(const Graph& g, const VertexSet& comp) {
    std::vector<int> side(g.vertex_count(), -1);
    int start = comp.first();
    if (start < 0) return side;
    side[start] = 0;
    std::vector<int> queue{start};
    for (size_t i = 0; i < queue.size(); ++i) {
        int u = queue[i];
        bool odd = false;
        g.neighbors(u).for_each([&](int v) {
            if (!comp.test(v)) return;
            if (side[v] == -1) {
                side[v] = 1 - side[u];
                queue.push_back(v);
            } else if (side[v] == side[u]) {
                odd = true;
            }
        });
        if (odd) return std::nullopt;
    }
    return side;
}

std::string pattern_name(Pattern p) {
    switch (p) {
        case Pattern::bull: return "bull";
        case Pattern::diamond: return "diamond";
        case Pattern::triangle: return "triangle";
        case Pattern::p5: return "P5";
        case Pattern::p6: return "P6";
        case Pattern::p7: return "P7";
    }
    return "?";
}

std::optional<std::vector<int>> find_pattern(const Graph& g, Pattern p) {
    switch (p) {
        case Pattern::bull: return find_bull(g);
        case Pattern::diamond: return find_diamond(g);
        case Pattern::triangle: return find_triangle(g);
        case Pattern::p5: return find_induced_path(g, 5);
        case Pattern::p6: return find_induced_path(g, 6);
        case Pattern::p7: return find_induced_path(g, 7);
    }
    return std::nullopt;
}

} // namespace chibound
