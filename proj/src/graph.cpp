#include "chibound/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "chibound/errors.hpp"

namespace chibound {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw Error("vertex count must be nonnegative");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, Bitset(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            std::ostringstream msg;
            msg << "edge (" << u << "," << v << ") has an endpoint outside 0.." << n - 1;
            throw Error(msg.str());
        }
        if (u == v) {
            std::ostringstream msg;
            msg << "self-loop (" << u << "," << v << ") rejected";
            throw Error(msg.str());
        }
        if (!g.adj_[u].test(v)) {
            g.adj_[u].set(v);
            g.adj_[v].set(u);
            ++g.m_;
        }
    }
    return g;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve((size_t)m_);
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v)) out.emplace_back(u, v);
    return out;
}

Graph Graph::complement() const {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adjacent(u, v)) e.emplace_back(u, v);
    return from_edges(n_, e);
}

Graph Graph::induced(const VertexSet& s, std::vector<int>* old_labels) const {
    std::vector<int> keep = s.to_vector();
    std::vector<int> pos(n_, -1);
    for (int i = 0; i < (int)keep.size(); ++i) pos[keep[i]] = i;
    std::vector<std::pair<int, int>> e;
    for (int u : keep)
        for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v))
            if (pos[v] >= 0) e.emplace_back(pos[u], pos[v]);
    if (old_labels) *old_labels = keep;
    return from_edges((int)keep.size(), e);
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : edges()) e.emplace_back(perm[u], perm[v]);
    return from_edges(n_, e);
}

namespace named {

Graph bull() {
    return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {1, 3}, {2, 4}});
}

Graph diamond() {
    return Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
}

Graph paw() {
    return Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
}

Graph grotzsch() {
    // Mycielskian of C5: outer cycle 0..4, shadow vertices 5..9 (5+i sees the
    // cycle neighbors of i), hub 10 sees every shadow.
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(5 + i, (i + 1) % 5);
        e.emplace_back(5 + i, (i + 4) % 5);
        e.emplace_back(10, 5 + i);
    }
    return Graph::from_edges(11, e);
}

Graph path(int t) {
    if (t < 1) throw Error("path(t) requires t >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < t; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(t, e);
}

Graph cycle(int t) {
    if (t < 3) throw Error("cycle(t) requires t >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < t; ++i) e.emplace_back(i, (i + 1) % t);
    return Graph::from_edges(t, e);
}

Graph complete(int t) {
    if (t < 1) throw Error("complete(t) requires t >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) e.emplace_back(i, j);
    return Graph::from_edges(t, e);
}

Graph prism(int omega) {
    if (omega < 1) throw Error("prism(omega) requires omega >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < omega; ++i) {
        for (int j = i + 1; j < omega; ++j) {
            e.emplace_back(i, j);
            e.emplace_back(omega + i, omega + j);
        }
        e.emplace_back(i, omega + i);
    }
    return Graph::from_edges(2 * omega, e);
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw Error("complete_bipartite(a,b) requires a,b >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph::from_edges(a + b, e);
}

Graph by_name(const std::string& name) {
    auto open = name.find('(');
    std::string head = name.substr(0, open);
    std::vector<int> args;
    if (open != std::string::npos) {
        if (name.back() != ')') throw Error("malformed graph name: " + name);
        std::string inner = name.substr(open + 1, name.size() - open - 2);
        std::istringstream ss(inner);
        std::string tok;
        while (std::getline(ss, tok, ',')) args.push_back(std::stoi(tok));
    }
    auto want = [&](size_t k) {
        if (args.size() != k) throw Error("graph " + head + " expects " + std::to_string(k) + " parameter(s)");
    };
    if (head == "bull") { want(0); return bull(); }
    if (head == "diamond") { want(0); return diamond(); }
    if (head == "paw") { want(0); return paw(); }
    if (head == "grotzsch") { want(0); return grotzsch(); }
    if (head == "path") { want(1); return path(args[0]); }
    if (head == "cycle") { want(1); return cycle(args[0]); }
    if (head == "complete") { want(1); return complete(args[0]); }
    if (head == "prism") { want(1); return prism(args[0]); }
    if (head == "complete_bipartite") { want(2); return complete_bipartite(args[0], args[1]); }
    throw Error("unknown graph name: " + name);
}

} // namespace named

Graph cartesian_product(const Graph& g, const Graph& h) {
    if (g.vertex_count() == 0 || h.vertex_count() == 0)
        throw Error("cartesian product requires nonempty factors");
    int hn = h.vertex_count();
    std::vector<std::pair<int, int>> e;
    for (int a = 0; a < g.vertex_count(); ++a)
        for (int u = 0; u < hn; ++u) {
            for (int v = h.neighbors(u).next(u); v >= 0; v = h.neighbors(u).next(v))
                e.emplace_back(a * hn + u, a * hn + v);
            for (int b = g.neighbors(a).next(a); b >= 0; b = g.neighbors(a).next(b))
                e.emplace_back(a * hn + u, b * hn + u);
        }
    return Graph::from_edges(g.vertex_count() * hn, e);
}

std::vector<VertexSet> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<VertexSet> comps;
    std::vector<bool> seen(n, false);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        VertexSet comp(n);
        std::deque<int> queue{s};
        seen[s] = true;
        comp.set(s);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            g.neighbors(u).for_each([&](int v) {
                if (!seen[v]) {
                    seen[v] = true;
                    comp.set(v);
                    queue.push_back(v);
                }
            });
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) {
    return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

std::vector<int> bfs_layers(const Graph& g, const VertexSet& s) {
    if (s.empty()) throw Error("bfs_layers requires a nonempty source set");
    int n = g.vertex_count();
    std::vector<int> dist(n, kUnreachable);
    std::deque<int> queue;
    s.for_each([&](int v) {
        dist[v] = 0;
        queue.push_back(v);
    });
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        g.neighbors(u).for_each([&](int v) {
            if (dist[v] == kUnreachable) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        });
    }
    return dist;
}

} // namespace chibound
