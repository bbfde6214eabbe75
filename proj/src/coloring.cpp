#include "chibound/coloring.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>

#include "chibound/errors.hpp"
#include "chibound/io.hpp"
#include "chibound/recognition.hpp"

namespace chibound {

namespace {

std::atomic<uint64_t> fallback_invocations{0};

std::string dump_instance(const Graph& g) {
    std::ostringstream out;
    io::write_edge_list(g, out);
    return out.str();
}

[[noreturn]] void pipeline_failed(const std::string& what, const Graph& g) {
    throw ProofClaimFailure(what + "\ninstance:\n" + dump_instance(g));
}

void ensure_proper(const Graph& g, const Coloring& c, const std::string& context) {
    auto v = verify_coloring(g, c);
    if (v.ok()) return;
    std::ostringstream msg;
    msg << context << ": coloring is not proper (" << v.uncolored.size() << " uncolored, "
        << v.monochromatic_edges.size() << " monochromatic edges";
    if (!v.monochromatic_edges.empty())
        msg << ", first " << v.monochromatic_edges[0].first << "-" << v.monochromatic_edges[0].second;
    msg << ")";
    pipeline_failed(msg.str(), g);
}

bool color_legal(const Graph& g, const std::vector<int>& colors, int v, int c) {
    bool ok = true;
    g.neighbors(v).for_each([&](int u) {
        if (colors[u] == c) ok = false;
    });
    return ok;
}

/// Triangle-free piece, colored per strategy. Exact always lands on the
/// chromatic number; the heuristic is retried exactly when it busts the budget.
Coloring tf_piece(const Graph& piece, TfStrategy strategy, std::optional<int> budget) {
    if (strategy == TfStrategy::dsatur_checked) {
        Coloring c = dsatur(piece);
        ensure_proper(piece, c, "dsatur");
        if (!budget || c.palette <= *budget) return c;
    }
    auto [chi, c] = chromatic_number_exact(piece);
    if (budget && chi > *budget) {
        std::ostringstream msg;
        msg << "triangle-free piece needs " << chi << " colors, above the claimed budget "
            << *budget << "; the class hypothesis does not hold for this input";
        throw Error(msg.str());
    }
    return c;
}

} // namespace

uint64_t extension_fallback_count() { return fallback_invocations.load(); }
void reset_extension_fallback_count() { fallback_invocations.store(0); }

Coloring color_triangle_free(const Graph& g, const TriangleFreeColorer& tf) {
    if (auto t = find_triangle(g)) throw ClassViolation("graph contains a triangle", *t);
    Coloring c = tf_piece(g, tf.strategy, tf.claimed_k);
    c.certificate = tf.strategy == TfStrategy::exact ? "triangle_free(exact)" : "triangle_free(dsatur_checked)";
    ensure_proper(g, c, "color_triangle_free");
    return c;
}

Coloring color_prism_case(const Graph& g, const CliqueLayering& L) {
    if (L.kind != LayerCase::prism && L.kind != LayerCase::empty_n1)
        throw Error("color_prism_case requires a prism or empty-N_1 layering");
    int w = L.omega();
    Coloring c;
    c.assignment.assign(g.vertex_count(), 0);
    c.palette = w;
    c.certificate = "prism";
    for (int i = 0; i < w; ++i) c.assignment[L.clique[i]] = i + 1;

    // Second row: W singleton of part j takes the shifted color (j mod w)+1,
    // which avoids its sole K-neighbor v_j; the N_2 clique absorbs the
    // leftover colors. Everything in N_1 u N_2 is pairwise adjacent, so the
    // colors must be pairwise distinct.
    std::vector<bool> used(w + 2, false);
    for (int j = 1; j <= w; ++j) {
        if (L.wpart[j - 1].empty()) continue;
        int x = L.wpart[j - 1].first();
        int col = (j % w) + 1;
        c.assignment[x] = col;
        used[col] = true;
    }
    std::vector<int> leftovers;
    for (int col = 1; col <= w; ++col)
        if (!used[col]) leftovers.push_back(col);
    size_t next = 0;
    bool exhausted = false;
    L.layer(2).for_each([&](int v) {
        if (next >= leftovers.size()) {
            exhausted = true;
            return;
        }
        c.assignment[v] = leftovers[next++];
    });
    if (exhausted) pipeline_failed("prism second row needs more than omega colors", g);
    ensure_proper(g, c, "color_prism_case");
    return c;
}

namespace {

// ---- clique-component extension --------------------------------------------

struct ExtensionPlan {
    int layer_index = 0;
    VertexSet fringe;     // N(comp) in the previous layer
    VertexSet attachment; // fringe vertices adjacent to all of comp ("A")
};

ExtensionPlan plan_extension(const Graph& g, const VertexSet& comp, const CliqueLayering& L) {
    ExtensionPlan plan;
    for (int i = 2; i <= L.depth(); ++i)
        if (comp.is_subset_of(L.layer(i))) {
            plan.layer_index = i;
            break;
        }
    if (plan.layer_index == 0)
        throw Error("component does not lie inside a single layer N_i with i >= 2");
    VertexSet prev = L.layer(plan.layer_index - 1);
    plan.fringe = VertexSet(g.vertex_count());
    for (int v = comp.first(); v >= 0; v = comp.next(v)) plan.fringe |= g.neighbors(v);
    plan.fringe &= prev;
    plan.attachment = VertexSet(g.vertex_count());
    for (int y = plan.fringe.first(); y >= 0; y = plan.fringe.next(y))
        if (comp.is_subset_of(g.neighbors(y))) plan.attachment.set(y);
    return plan;
}

// Most-constrained-first greedy over `order`; rolls back on failure.
bool greedy_assign(const Graph& g, std::vector<int>& colors, std::vector<int> order, int palette) {
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        int fa = 0, fb = 0;
        Bitset seen_a(palette + 2), seen_b(palette + 2);
        g.neighbors(a).for_each([&](int u) {
            if (colors[u] > 0 && !seen_a.test(colors[u])) { seen_a.set(colors[u]); ++fa; }
        });
        g.neighbors(b).for_each([&](int u) {
            if (colors[u] > 0 && !seen_b.test(colors[u])) { seen_b.set(colors[u]); ++fb; }
        });
        return fa > fb;
    });
    std::vector<int> assigned;
    for (int v : order) {
        int c = 1;
        while (c <= palette && !color_legal(g, colors, v, c)) ++c;
        if (c > palette) {
            for (int u : assigned) colors[u] = 0;
            return false;
        }
        colors[v] = c;
        assigned.push_back(v);
    }
    return true;
}

// Exact search over `vars` (in order), everything else fixed.
bool backtrack_assign(const Graph& g, std::vector<int>& colors, const std::vector<int>& vars,
                      size_t idx, int palette) {
    if (idx == vars.size()) return true;
    int v = vars[idx];
    for (int c = 1; c <= palette; ++c) {
        if (!color_legal(g, colors, v, c)) continue;
        int saved = colors[v];
        colors[v] = c;
        if (backtrack_assign(g, colors, vars, idx + 1, palette)) return true;
        colors[v] = saved;
    }
    return false;
}

} // namespace

Coloring extend_into_clique_component(Coloring partial, const VertexSet& comp,
                                      const CliqueLayering& L, const Graph& g) {
    std::vector<int> members = comp.to_vector();
    Graph comp_graph = g.induced(comp);
    if (!find_triangle(comp_graph))
        throw ClassViolation("component has no triangle; it belongs to the triangle-free route", members);
    for (size_t a = 0; a < members.size(); ++a)
        for (size_t b = a + 1; b < members.size(); ++b)
            if (!g.adjacent(members[a], members[b]))
                throw ClassViolation("component with a triangle is not a clique", members);
    int palette = partial.palette;
    if (palette < L.omega()) throw Error("partial palette is below omega");
    for (int v : members)
        if (partial.assignment[v] != 0) throw Error("component is already colored");

    ExtensionPlan plan = plan_extension(g, comp, L);
    std::vector<int>& colors = partial.assignment;

    // 1) plain greedy over the component
    if (greedy_assign(g, colors, members, palette)) return partial;

    // 2) the recoloring argument: the attachment keeps its colors, the one
    //    component vertex x1 with private fringe neighbors takes the color of
    //    the attachment's parent u, and the private neighbors take the color
    //    of the attachment vertex x. Every move is checked against the
    //    current coloring before commit.
    do {
        std::vector<int> with_priv;
        for (int v : members) {
            Bitset priv = g.neighbors(v) & plan.fringe;
            priv.subtract(plan.attachment);
            if (!priv.empty()) with_priv.push_back(v);
        }
        if (with_priv.size() != 1 || plan.attachment.empty()) break;
        int x1 = with_priv[0];
        int x = plan.attachment.first();
        VertexSet grandparents = plan.layer_index == 2
                                     ? Bitset::of(g.vertex_count(), L.clique)
                                     : L.layer(plan.layer_index - 2);
        Bitset parents = g.neighbors(x) & grandparents;
        if (parents.empty()) break;
        int u = parents.first();

        std::vector<int> scratch = colors;
        Bitset priv = g.neighbors(x1) & plan.fringe;
        priv.subtract(plan.attachment);
        bool ok = true;
        priv.for_each([&](int y) {
            if (!ok) return;
            scratch[y] = 0;
            if (color_legal(g, scratch, y, colors[x]))
                scratch[y] = colors[x];
            else
                ok = false;
        });
        if (ok && color_legal(g, scratch, x1, scratch[u]))
            scratch[x1] = scratch[u];
        else
            ok = false;
        if (ok) {
            std::vector<int> rest;
            for (int v : members)
                if (v != x1) rest.push_back(v);
            ok = greedy_assign(g, scratch, rest, palette);
        }
        if (ok) {
            colors = std::move(scratch);
            return partial;
        }
    } while (false);

    // 3) instrumented exact fallback: first the component alone, then the
    //    component together with its fringe, all freed before the search so
    //    coordinated fringe recolorings stay reachable.
    ++fallback_invocations;
    if (backtrack_assign(g, colors, members, 0, palette)) return partial;
    std::vector<int> vars = plan.fringe.to_vector();
    vars.insert(vars.end(), members.begin(), members.end());
    std::vector<int> saved;
    for (int v : vars) {
        saved.push_back(colors[v]);
        colors[v] = 0;
    }
    if (backtrack_assign(g, colors, vars, 0, palette)) return partial;
    for (size_t i = 0; i < vars.size(); ++i) colors[vars[i]] = saved[i];
    pipeline_failed("clique-component extension exhausted every fallback", g);
}

// ---- shared base coloring (K and N_1) --------------------------------------

namespace {

void color_base_layers(const Graph& gc, const CliqueLayering& L, std::vector<int>& colors) {
    for (int i = 0; i < L.omega(); ++i) colors[L.clique[i]] = i + 1;
    if (L.kind == LayerCase::two_part) {
        L.wpart[0].for_each([&](int v) { colors[v] = 2; });
        L.wpart[1].for_each([&](int v) { colors[v] = 1; });
        return;
    }
    // single part: color 2 on one vertex per clique component (a maximum
    // independent transversal of a clique union), the rest upward from 3.
    std::vector<int> labels;
    Graph sub = gc.induced(L.layer(1), &labels);
    VertexSet n2 = L.layer(2);
    for (const auto& comp : connected_components(sub)) {
        std::vector<int> members;
        comp.for_each([&](int v) { members.push_back(labels[v]); });
        if ((int)members.size() > L.omega() - 1)
            pipeline_failed("an N_1 clique component exceeds omega-1 vertices", gc);
        colors[members[0]] = 2;
        for (size_t j = 1; j < members.size(); ++j) colors[members[j]] = 2 + (int)j;
        // Vertices inside N_1 edges never reach N_2; only the singletons
        // (colored 2) may.
        if (members.size() >= 2)
            for (int v : members)
                if (gc.neighbors(v).intersects(n2))
                    pipeline_failed("a vertex of an N_1 edge has a neighbor in N_2", gc);
    }
}

int max_used(const std::vector<int>& colors) {
    int m = 0;
    for (int c : colors) m = std::max(m, c);
    return m;
}

struct LayerPieces {
    std::vector<std::pair<VertexSet, Graph>> tf;  // component set (original labels) + its graph
    std::vector<VertexSet> cliques;               // triangle components, original labels
};

LayerPieces split_layer(const Graph& gc, const CliqueLayering& L, int i) {
    LayerPieces out;
    std::vector<int> labels;
    Graph sub = gc.induced(L.layer(i), &labels);
    for (const auto& comp : connected_components(sub)) {
        VertexSet orig(gc.vertex_count());
        comp.for_each([&](int v) { orig.set(labels[v]); });
        Graph piece = sub.induced(comp);
        if (find_triangle(piece)) {
            for (int v = orig.first(); v >= 0; v = orig.next(v))
                if (gc.neighbors(v).intersect_count(orig) != orig.count() - 1)
                    pipeline_failed("a layer component with a triangle is not a clique", gc);
            out.cliques.push_back(orig);
        } else {
            out.tf.emplace_back(orig, piece);
        }
    }
    return out;
}

void extend_cliques(const Graph& gc, const CliqueLayering& L, std::vector<int>& colors,
                    const std::vector<VertexSet>& cliques, int palette) {
    for (const auto& comp : cliques) {
        Coloring partial;
        partial.assignment = colors;
        partial.palette = palette;
        partial = extend_into_clique_component(std::move(partial), comp, L, gc);
        colors = partial.assignment;
    }
}

// ---- Theorem "max{2k, omega}" pipeline -------------------------------------

// Smallest budget valid for every triangle-free piece the pipeline will meet.
int required_budget(const Graph& g) {
    int k = 1;
    for (const auto& comp : connected_components(g)) {
        Graph gc = g.induced(comp);
        if (clique_number(gc) <= 2) {
            k = std::max(k, chromatic_number_exact(gc).first);
            continue;
        }
        CliqueLayering L = clique_layering(gc, max_clique(gc));
        if (L.kind == LayerCase::prism || L.kind == LayerCase::empty_n1) continue;
        for (int i = 2; i <= L.depth(); ++i)
            for (auto& [orig, piece] : split_layer(gc, L, i).tf)
                k = std::max(k, chromatic_number_exact(piece).first);
    }
    return k;
}

Coloring thm32_component(const Graph& gc, TfStrategy strategy, int k, bool& was_prism, bool& was_tf) {
    was_prism = was_tf = false;
    int omega = clique_number(gc);
    if (omega <= 2) {
        was_tf = true;
        Coloring c = tf_piece(gc, strategy, k);
        c.certificate = "thm32";
        return c;
    }
    CliqueLayering L = clique_layering(gc, max_clique(gc));
    if (L.kind == LayerCase::prism || L.kind == LayerCase::empty_n1) {
        was_prism = true;
        return color_prism_case(gc, L);
    }
    std::vector<int> colors(gc.vertex_count(), 0);
    color_base_layers(gc, L, colors);
    int p_ext = std::max(2 * k, omega);
    for (int i = 2; i <= L.depth(); ++i) {
        LayerPieces pieces = split_layer(gc, L, i);
        int base = (i % 2 == 0) ? k : 0; // {k+1..2k} on even layers, {1..k} on odd
        for (auto& [orig, piece] : pieces.tf) {
            Coloring pc = tf_piece(piece, strategy, k);
            std::vector<int> members = orig.to_vector();
            for (size_t j = 0; j < members.size(); ++j)
                colors[members[j]] = base + pc.assignment[j];
        }
        extend_cliques(gc, L, colors, pieces.cliques, p_ext);
    }
    Coloring out;
    out.assignment = std::move(colors);
    out.palette = max_used(out.assignment);
    out.certificate = "thm32";
    ensure_proper(gc, out, "thm32");
    if (out.palette > std::max(2 * k, omega))
        pipeline_failed("thm32 exceeded the max{2k, omega} bound", gc);
    return out;
}

// Merges per-component colorings into a coloring of g.
struct Assembler {
    Coloring out;
    explicit Assembler(int n) {
        out.assignment.assign(n, 0);
        out.palette = 0;
    }
    void add(const std::vector<int>& labels, const Coloring& part) {
        for (size_t i = 0; i < labels.size(); ++i) out.assignment[labels[i]] = part.assignment[i];
        out.palette = std::max(out.palette, part.palette);
    }
};

} // namespace

std::pair<Coloring, BoundCertificate> color_bull_diamond(const Graph& g, const TriangleFreeColorer& tf) {
    if (auto w = find_bull(g)) throw ClassViolation("graph contains an induced bull", *w);
    if (auto w = find_diamond(g)) throw ClassViolation("graph contains an induced diamond", *w);
    int omega_g = clique_number(g);
    // Budgets below 2 are meaningless once the class contains an edge; the
    // color windows also need {1..k} and {k+1..2k} disjoint from {1, 2}.
    int k = std::max(2, tf.claimed_k ? *tf.claimed_k : required_budget(g));

    Assembler acc(g.vertex_count());
    bool all_prism = true, all_tf = true;
    for (const auto& comp : connected_components(g)) {
        std::vector<int> labels;
        Graph gc = g.induced(comp, &labels);
        bool was_prism = false, was_tf = false;
        Coloring part = thm32_component(gc, tf.strategy, k, was_prism, was_tf);
        acc.add(labels, part);
        all_prism = all_prism && was_prism;
        all_tf = all_tf && was_tf;
    }
    BoundCertificate cert;
    cert.omega = omega_g;
    cert.k_used = k;
    if (g.vertex_count() > 0 && all_prism) {
        cert.theorem = "prism";
        cert.claimed_bound = omega_g;
        cert.k_used.reset();
    } else if (g.vertex_count() > 0 && all_tf) {
        cert.theorem = "triangle_free";
        cert.claimed_bound = k;
    } else {
        cert.theorem = "thm32";
        cert.claimed_bound = std::max(2 * k, omega_g);
    }
    acc.out.certificate = cert.theorem;
    if (acc.out.palette > cert.claimed_bound)
        pipeline_failed("palette exceeded the certified bound", g);
    return {std::move(acc.out), cert};
}

// ---- (P_5, bull, diamond)-free ----------------------------------------------

namespace {

void check_class(const Graph& g, std::optional<int> path_t) {
    if (auto w = find_bull(g)) throw ClassViolation("graph contains an induced bull", *w);
    if (auto w = find_diamond(g)) throw ClassViolation("graph contains an induced diamond", *w);
    if (path_t)
        if (auto w = find_induced_path(g, *path_t))
            throw ClassViolation("graph contains an induced P_" + std::to_string(*path_t), *w);
}

} // namespace

std::pair<Coloring, BoundCertificate> color_p5(const Graph& g) {
    check_class(g, 5);
    int omega_g = clique_number(g);
    Assembler acc(g.vertex_count());
    for (const auto& comp : connected_components(g)) {
        std::vector<int> labels;
        Graph gc = g.induced(comp, &labels);
        int omega = clique_number(gc);
        if (omega <= 2) {
            Coloring part = tf_piece(gc, TfStrategy::exact, 3);
            acc.add(labels, part);
            continue;
        }
        if (gc.vertex_count() <= 24) {
            auto verdict = is_perfect(gc);
            if (!verdict.perfect)
                pipeline_failed("a (P_5, bull, diamond)-free component with a triangle is not perfect", gc);
        }
        auto [chi, part] = chromatic_number_exact(gc);
        if (chi != omega)
            pipeline_failed("perfection promised chi = omega but the oracle disagrees", gc);
        acc.add(labels, part);
    }
    BoundCertificate cert;
    cert.theorem = "cor_p5";
    cert.omega = omega_g;
    cert.claimed_bound = std::max(3, omega_g);
    cert.k_used = 3;
    acc.out.certificate = cert.theorem;
    ensure_proper(g, acc.out, "color_p5");
    return {std::move(acc.out), cert};
}

// ---- (P_6, bull, diamond)-free ----------------------------------------------

namespace {

// Constructive 3-coloring for a connected component with omega = 3.
Coloring p6_omega3_component(const Graph& gc) {
    CliqueLayering L = clique_layering(gc, max_clique(gc));
    if (L.kind == LayerCase::prism || L.kind == LayerCase::empty_n1) return color_prism_case(gc, L);

    // Structural fact the construction rests on: the second layer is bipartite.
    if (!is_bipartite(gc.induced(L.layer(2))))
        pipeline_failed("N_2 of an omega-3 component is not bipartite", gc);

    std::vector<int> colors(gc.vertex_count(), 0);
    for (int i = 0; i < 3; ++i) colors[L.clique[i]] = i + 1;

    if (L.kind == LayerCase::two_part) {
        // Case 2: both parts nonempty forces the layering to stop at N_2.
        if (L.depth() > 2) pipeline_failed("two-part omega-3 component reaches N_3", gc);
        L.wpart[0].for_each([&](int v) { colors[v] = 2; });
        L.wpart[1].for_each([&](int v) { colors[v] = 1; });
        std::vector<int> labels;
        Graph sub = gc.induced(L.layer(2), &labels);
        for (const auto& comp : connected_components(sub)) {
            std::vector<int> members;
            comp.for_each([&](int v) { members.push_back(labels[v]); });
            if (members.size() == 1) {
                int x = members[0];
                bool w1 = gc.neighbors(x).intersects(L.wpart[0]);
                bool w2 = gc.neighbors(x).intersects(L.wpart[1]);
                if (w1 && w2 && gc.degree(x) != 2)
                    pipeline_failed("an N_2 vertex seeing both W parts has degree above 2", gc);
                int c = 1;
                while (c <= 3 && !color_legal(gc, colors, x, c)) ++c;
                if (c > 3) pipeline_failed("an isolated N_2 vertex rejects all three colors", gc);
                colors[x] = c;
                continue;
            }
            auto sides = bipartition_sides(sub, comp);
            if (!sides) pipeline_failed("an N_2 component is not bipartite", gc);
            for (int x : members) {
                bool w1 = gc.neighbors(x).intersects(L.wpart[0]);
                bool w2 = gc.neighbors(x).intersects(L.wpart[1]);
                if (w1 && w2)
                    pipeline_failed("a non-isolated N_2 vertex sees both W parts", gc);
            }
            // The side holding the smallest member takes color 3; the other
            // side dodges its own W part.
            int smallest_side = -1;
            comp.for_each([&](int v) {
                if (smallest_side == -1) smallest_side = (*sides)[v];
            });
            comp.for_each([&](int v) {
                int x = labels[v];
                if ((*sides)[v] == smallest_side)
                    colors[x] = 3;
                else
                    colors[x] = gc.neighbors(x).intersects(L.wpart[0]) ? 1 : 2;
            });
        }
    } else {
        // Case 1: N_1 is one W part, a union of K_1s and K_2s.
        std::vector<int> labels;
        Graph sub = gc.induced(L.layer(1), &labels);
        VertexSet n2 = L.layer(2);
        for (const auto& comp : connected_components(sub)) {
            std::vector<int> members;
            comp.for_each([&](int v) { members.push_back(labels[v]); });
            if (members.size() > 2) pipeline_failed("an N_1 component exceeds two vertices at omega 3", gc);
            colors[members[0]] = 2;
            if (members.size() == 2) {
                colors[members[1]] = 3;
                for (int v : members)
                    if (gc.neighbors(v).intersects(n2))
                        pipeline_failed("a vertex of an N_1 edge has a neighbor in N_2", gc);
            }
        }
        // N_2 is bipartite and only touches color-2 vertices of N_1: colors 1 and 3.
        std::vector<int> labels2;
        Graph sub2 = gc.induced(L.layer(2), &labels2);
        for (const auto& comp : connected_components(sub2)) {
            auto sides = bipartition_sides(sub2, comp);
            if (!sides) pipeline_failed("an N_2 component is not bipartite", gc);
            int smallest_side = -1;
            comp.for_each([&](int v) {
                if (smallest_side == -1) smallest_side = (*sides)[v];
            });
            comp.for_each([&](int v) {
                colors[labels2[v]] = (*sides)[v] == smallest_side ? 1 : 3;
            });
        }
        // N_3 is a union of K_1s and K_2s; N_4 is empty.
        if (L.depth() > 3) pipeline_failed("omega-3 case 1 reaches N_4", gc);
        if (L.depth() >= 3) {
            std::vector<int> labels3;
            Graph sub3 = gc.induced(L.layer(3), &labels3);
            for (const auto& comp : connected_components(sub3)) {
                std::vector<int> members;
                comp.for_each([&](int v) { members.push_back(labels3[v]); });
                if (members.size() > 2)
                    pipeline_failed("an N_3 component exceeds two vertices at omega 3", gc);
                if (members.size() == 1) {
                    // All its neighbors sit in N_2 with colors 1 and 3.
                    if (!color_legal(gc, colors, members[0], 2))
                        pipeline_failed("an isolated N_3 vertex cannot take color 2", gc);
                    colors[members[0]] = 2;
                } else {
                    int x = members[0], y = members[1];
                    Bitset nx = gc.neighbors(x) & n2;
                    Bitset ny = gc.neighbors(y) & n2;
                    if (nx.count() != 1 || !(nx == ny))
                        pipeline_failed("an N_3 edge lacks the single shared N_2 neighbor", gc);
                    int shared = colors[nx.first()];
                    std::vector<int> pair;
                    for (int c = 1; c <= 3; ++c)
                        if (c != shared) pair.push_back(c);
                    colors[x] = pair[0];
                    colors[y] = pair[1];
                }
            }
        }
    }
    Coloring out;
    out.assignment = std::move(colors);
    out.palette = max_used(out.assignment);
    out.certificate = "thm_p6_omega3";
    ensure_proper(gc, out, "p6 omega-3");
    if (out.palette > 3) pipeline_failed("omega-3 component took more than three colors", gc);
    return out;
}

// Omega-coloring for a connected component with omega >= 4.
Coloring p6_big_component(const Graph& gc) {
    int omega = clique_number(gc);
    CliqueLayering L = clique_layering(gc, max_clique(gc));
    if (L.kind == LayerCase::prism || L.kind == LayerCase::empty_n1) return color_prism_case(gc, L);

    std::vector<int> colors(gc.vertex_count(), 0);
    color_base_layers(gc, L, colors);

    // N_2 is perfect, so its triangle-free components are bipartite; they take
    // colors 3 and 4. Clique components extend within omega colors.
    if (L.layer(2).count() <= 24 && !is_perfect(gc.induced(L.layer(2))).perfect)
        pipeline_failed("N_2 of a (P_6)-pipeline component is not perfect", gc);
    LayerPieces n2 = split_layer(gc, L, 2);
    for (auto& [orig, piece] : n2.tf) {
        std::vector<int> members = orig.to_vector();
        auto sides = bipartition_sides(piece, Bitset::full(piece.vertex_count()));
        if (!sides) pipeline_failed("a triangle-free N_2 component is not bipartite", gc);
        for (size_t j = 0; j < members.size(); ++j)
            colors[members[j]] = (*sides)[j] == (*sides)[0] ? 3 : 4;
    }
    extend_cliques(gc, L, colors, n2.cliques, omega);

    // N_4 is empty and N_3 is a union of cliques. Small cliques take the low
    // colors {1, 2} (their N_2 neighbors are all in the {3,4}-colored
    // triangle-free parts; triangle components of N_2 never reach N_3).
    if (L.depth() > 3) pipeline_failed("(P_6)-pipeline component reaches N_4", gc);
    if (L.depth() >= 3) {
        LayerPieces n3 = split_layer(gc, L, 3);
        for (auto& [orig, piece] : n3.tf) {
            std::vector<int> members = orig.to_vector();
            if (members.size() > 2)
                pipeline_failed("a triangle-free N_3 component is not a K_1 or K_2", gc);
            for (size_t j = 0; j < members.size(); ++j) {
                int c = (int)j + 1;
                if (!color_legal(gc, colors, members[j], c))
                    pipeline_failed("an N_3 small clique rejects colors {1, 2}", gc);
                colors[members[j]] = c;
            }
        }
        extend_cliques(gc, L, colors, n3.cliques, omega);
    }
    Coloring out;
    out.assignment = std::move(colors);
    out.palette = max_used(out.assignment);
    out.certificate = "thm_p6_big";
    ensure_proper(gc, out, "p6 omega-coloring");
    if (out.palette > omega) pipeline_failed("(P_6)-pipeline exceeded omega colors", gc);
    return out;
}

} // namespace

std::pair<Coloring, BoundCertificate> color_p6(const Graph& g) {
    check_class(g, 6);
    int omega_g = clique_number(g);
    Assembler acc(g.vertex_count());
    int claimed = 0;
    for (const auto& comp : connected_components(g)) {
        std::vector<int> labels;
        Graph gc = g.induced(comp, &labels);
        int omega = clique_number(gc);
        Coloring part;
        if (omega <= 2) {
            part = tf_piece(gc, TfStrategy::exact, 4);
            claimed = std::max(claimed, 4);
        } else if (omega == 3) {
            part = p6_omega3_component(gc);
            claimed = std::max(claimed, 3);
        } else {
            part = p6_big_component(gc);
            claimed = std::max(claimed, omega);
        }
        acc.add(labels, part);
    }
    BoundCertificate cert;
    cert.omega = omega_g;
    if (omega_g <= 2) {
        cert.theorem = "cor_p6_omega2";
        cert.k_used = 4;
    } else if (omega_g == 3) {
        cert.theorem = "thm_p6_omega3";
    } else {
        cert.theorem = "thm_p6_big";
    }
    cert.claimed_bound = std::max(claimed, g.vertex_count() > 0 ? 1 : 0);
    acc.out.certificate = cert.theorem;
    ensure_proper(g, acc.out, "color_p6");
    return {std::move(acc.out), cert};
}

// ---- (P_7, bull, diamond)-free ----------------------------------------------

namespace {

Coloring p7_component(const Graph& gc) {
    int omega = clique_number(gc);
    CliqueLayering L = clique_layering(gc, max_clique(gc));
    if (L.kind == LayerCase::prism || L.kind == LayerCase::empty_n1) return color_prism_case(gc, L);

    int palette = std::max(7, omega);
    std::vector<int> colors(gc.vertex_count(), 0);
    color_base_layers(gc, L, colors);

    // N_2: triangle-free components fit in five colors (Fact 2 at t = 7) and
    // live in the window {3..7}, clear of both N_1 colors in either case.
    LayerPieces n2 = split_layer(gc, L, 2);
    for (auto& [orig, piece] : n2.tf) {
        Coloring pc = tf_piece(piece, TfStrategy::exact, 5);
        std::vector<int> members = orig.to_vector();
        for (size_t j = 0; j < members.size(); ++j) colors[members[j]] = 2 + pc.assignment[j];
    }
    extend_cliques(gc, L, colors, n2.cliques, palette);

    // N_3 is perfect: its triangle-free components take colors {1, 2}.
    if (L.depth() >= 3) {
        if (L.layer(3).count() <= 24 && !is_perfect(gc.induced(L.layer(3))).perfect)
            pipeline_failed("N_3 of a (P_7)-pipeline component is not perfect", gc);
        LayerPieces n3 = split_layer(gc, L, 3);
        for (auto& [orig, piece] : n3.tf) {
            std::vector<int> members = orig.to_vector();
            auto sides = bipartition_sides(piece, Bitset::full(piece.vertex_count()));
            if (!sides) pipeline_failed("a triangle-free N_3 component is not bipartite", gc);
            for (size_t j = 0; j < members.size(); ++j)
                colors[members[j]] = (*sides)[j] == (*sides)[0] ? 1 : 2;
        }
        extend_cliques(gc, L, colors, n3.cliques, palette);
    }

    // N_5 is empty; N_4 is a union of cliques whose small members take {3, 4}
    // (their N_3 neighbors are {1,2}-colored: triangle components of N_3
    // never reach N_4).
    if (L.depth() > 4) pipeline_failed("(P_7)-pipeline component reaches N_5", gc);
    if (L.depth() >= 4) {
        LayerPieces n4 = split_layer(gc, L, 4);
        for (auto& [orig, piece] : n4.tf) {
            std::vector<int> members = orig.to_vector();
            if (members.size() > 2)
                pipeline_failed("a triangle-free N_4 component is not a K_1 or K_2", gc);
            for (size_t j = 0; j < members.size(); ++j) {
                int c = (int)j + 3;
                if (!color_legal(gc, colors, members[j], c))
                    pipeline_failed("an N_4 small clique rejects colors {3, 4}", gc);
                colors[members[j]] = c;
            }
        }
        extend_cliques(gc, L, colors, n4.cliques, palette);
    }
    Coloring out;
    out.assignment = std::move(colors);
    out.palette = max_used(out.assignment);
    out.certificate = "thm_p7";
    ensure_proper(gc, out, "p7 pipeline");
    if (out.palette > palette) pipeline_failed("(P_7)-pipeline exceeded max{7, omega} colors", gc);
    return out;
}

} // namespace

std::pair<Coloring, BoundCertificate> color_p7(const Graph& g) {
    check_class(g, 7);
    int omega_g = clique_number(g);
    Assembler acc(g.vertex_count());
    for (const auto& comp : connected_components(g)) {
        std::vector<int> labels;
        Graph gc = g.induced(comp, &labels);
        Coloring part = clique_number(gc) <= 2 ? tf_piece(gc, TfStrategy::exact, 5) : p7_component(gc);
        acc.add(labels, part);
    }
    BoundCertificate cert;
    cert.theorem = "thm_p7";
    cert.omega = omega_g;
    cert.claimed_bound = std::max(7, omega_g);
    cert.k_used = 5;
    acc.out.certificate = cert.theorem;
    ensure_proper(g, acc.out, "color_p7");
    return {std::move(acc.out), cert};
}

std::pair<Coloring, BoundCertificate> color_dispatch(const Graph& g) {
    if (auto w = find_bull(g)) throw ClassViolation("graph contains an induced bull", *w);
    if (auto w = find_diamond(g)) throw ClassViolation("graph contains an induced diamond", *w);
    int longest = longest_induced_path(g, 7);
    if (longest <= 4) return color_p5(g);
    if (longest == 5) return color_p6(g);
    if (longest == 6) return color_p7(g);
    return color_bull_diamond(g, TriangleFreeColorer{TfStrategy::exact, std::nullopt});
}

} // namespace chibound
