#include "hellylab/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "hellylab/errors.hpp"

namespace hellylab {

SimpleGraph SimpleGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw InputError("negative vertex count");
    SimpleGraph g(n);
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InputError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
        if (u == v) throw InputError("loop edge at vertex " + std::to_string(u));
        std::pair<int, int> key = std::minmax(u, v);
        if (!seen.insert(key).second) continue;
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& a : g.adj_) std::sort(a.begin(), a.end());
    return g;
}

bool SimpleGraph::adjacent(int u, int v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) e.emplace_back(u, v);
    return e;
}

int SimpleGraph::edge_count() const {
    int c = 0;
    for (const auto& a : adj_) c += static_cast<int>(a.size());
    return c / 2;
}

void SimpleGraph::add_edge(int u, int v) {
    if (u == v || adjacent(u, v)) return;
    adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

std::vector<int> SimpleGraph::bfs_from(int src) const {
    std::vector<int> dist(n_, -1);
    std::deque<int> q{src};
    dist[src] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int v : adj_[u])
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push_back(v);
            }
    }
    return dist;
}

bool SimpleGraph::connected() const { return !disconnected_witness().has_value(); }

std::optional<std::pair<int, int>> SimpleGraph::disconnected_witness() const {
    if (n_ == 0) return std::nullopt;
    auto d = bfs_from(0);
    for (int v = 0; v < n_; ++v)
        if (d[v] < 0) return std::make_pair(0, v);
    return std::nullopt;
}

std::vector<std::vector<int>> SimpleGraph::distance_matrix() const {
    if (auto w = disconnected_witness())
        throw InputError("graph is disconnected: no path between " + std::to_string(w->first) +
                         " and " + std::to_string(w->second));
    std::vector<std::vector<int>> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = bfs_from(v);
    return d;
}

std::vector<int> SimpleGraph::bfs_order(int src) const {
    std::vector<int> order;
    std::vector<char> seen(n_, 0);
    std::deque<int> q{src};
    seen[src] = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        order.push_back(u);
        for (int v : adj_[u])
            if (!seen[v]) {
                seen[v] = 1;
                q.push_back(v);
            }
    }
    for (int v = 0; v < n_; ++v)
        if (!seen[v]) order.push_back(v);
    return order;
}

Bits SimpleGraph::ball(const std::vector<std::vector<int>>& dist, int n, int center, int radius) {
    Bits b(n);
    for (int v = 0; v < n; ++v)
        if (dist[center][v] >= 0 && dist[center][v] <= radius) b.set(v);
    return b;
}

GraphMetric graph_metric(const SimpleGraph& g) {
    GraphMetric m;
    m.dist = g.distance_matrix();
    m.ecc.resize(g.size(), 0);
    for (int v = 0; v < g.size(); ++v) {
        for (int u = 0; u < g.size(); ++u) m.ecc[v] = std::max(m.ecc[v], m.dist[v][u]);
        m.diameter = std::max(m.diameter, m.ecc[v]);
    }
    return m;
}

FiniteMetric graph_distance_matrix(const SimpleGraph& g) {
    auto d = g.distance_matrix();
    std::vector<std::vector<Rat>> t(g.size(), std::vector<Rat>(g.size()));
    for (int i = 0; i < g.size(); ++i)
        for (int j = 0; j < g.size(); ++j) t[i][j] = d[i][j];
    return FiniteMetric::require(std::move(t));
}

namespace {

void bron_kerbosch(const SimpleGraph& g, const std::vector<Bits>& nbr, Bits r, Bits p, Bits x,
                   std::vector<Bits>& out, size_t cap) {
    if (p.none() && x.none()) {
        out.push_back(r);
        if (out.size() > cap) throw BoundExceeded("maximal clique enumeration exceeded cap");
        return;
    }
    // pivot: vertex of P∪X maximizing |P ∩ N(u)|
    int pivot = -1, best = -1;
    Bits pux = p | x;
    pux.for_each([&](int u) {
        int c = (p & nbr[u]).count();
        if (c > best) {
            best = c;
            pivot = u;
        }
    });
    Bits cand = p;
    if (pivot >= 0) {
        Bits pn = nbr[pivot];
        Bits rest(cand.universe());
        cand.for_each([&](int v) {
            if (!pn.test(v)) rest.set(v);
        });
        cand = rest;
    }
    cand.for_each([&](int v) {
        Bits r2 = r;
        r2.set(v);
        bron_kerbosch(g, nbr, r2, p & nbr[v], x & nbr[v], out, cap);
        p.reset(v);
        x.set(v);
    });
}

}  // namespace

std::vector<Bits> maximal_cliques(const SimpleGraph& g, size_t cap) {
    const int n = g.size();
    std::vector<Bits> nbr(n, Bits(n));
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) nbr[v].set(u);
    std::vector<Bits> out;
    Bits p(n);
    for (int v = 0; v < n; ++v) p.set(v);
    bron_kerbosch(g, nbr, Bits(n), p, Bits(n), out, cap);
    std::sort(out.begin(), out.end(),
              [](const Bits& a, const Bits& b) { return a.members() < b.members(); });
    return out;
}

std::vector<Bits> all_cliques(const SimpleGraph& g, size_t cap) {
    const int n = g.size();
    std::vector<Bits> nbr(n, Bits(n));
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) nbr[v].set(u);
    std::vector<Bits> out;
    std::vector<int> stack;
    auto extend = [&](auto&& self, Bits cur, Bits cand) -> void {
        cand.for_each([&](int v) {
            Bits c2 = cur;
            c2.set(v);
            out.push_back(c2);
            if (out.size() > cap) throw BoundExceeded("clique enumeration exceeded cap");
            Bits cand2 = cand & nbr[v];
            // only vertices above v to avoid duplicates
            Bits above(n);
            cand2.for_each([&](int u) {
                if (u > v) above.set(u);
            });
            self(self, c2, above);
        });
    };
    Bits full(n);
    for (int v = 0; v < n; ++v) full.set(v);
    extend(extend, Bits(n), full);
    std::sort(out.begin(), out.end(),
              [](const Bits& a, const Bits& b) { return a.members() < b.members(); });
    return out;
}

}  // namespace hellylab
