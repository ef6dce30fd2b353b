#pragma once

// Shared fixtures and independent oracles for the test suites. Oracles
// here deliberately avoid the library's enumeration strategies: the tight
// span oracle walks every tight-pair subset, the hull oracle scans the
// full value grid, distances come from Floyd-Warshall instead of BFS.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hellylab/delta.hpp"
#include "hellylab/graph.hpp"
#include "hellylab/metric.hpp"

namespace testsupport {

using hellylab::FiniteMetric;
using hellylab::Rat;
using hellylab::SimpleGraph;

inline FiniteMetric metric_from_int(const std::vector<std::vector<int>>& t) {
    std::vector<std::vector<Rat>> q(t.size());
    for (size_t i = 0; i < t.size(); ++i)
        for (int v : t[i]) q[i].push_back(Rat(v));
    return FiniteMetric::require(std::move(q));
}

inline FiniteMetric unit_equilateral(int n = 3) {
    std::vector<std::vector<Rat>> t(n, std::vector<Rat>(n, Rat(1)));
    for (int i = 0; i < n; ++i) t[i][i] = 0;
    return FiniteMetric::require(std::move(t));
}

inline FiniteMetric two_points(const Rat& d) {
    return FiniteMetric::require({{Rat(0), d}, {d, Rat(0)}});
}

// ---------------------------------------------------------------------------
// Oracle: tight span vertices by exhaustive tight-pair subset enumeration
// with exact linear solves. Usable up to n = 5.
// ---------------------------------------------------------------------------

inline std::vector<std::vector<Rat>> oracle_tight_span_vertices(const FiniteMetric& m) {
    const int n = m.size();
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y) pairs.emplace_back(x, y);
    const int p = static_cast<int>(pairs.size());

    std::set<std::vector<Rat>> found;
    for (long mask = 1; mask < (1L << p); ++mask) {
        // build the linear system f(x) + f(y) = d(x,y) over selected pairs
        std::vector<std::vector<Rat>> a;
        std::vector<Rat> rhs;
        for (int i = 0; i < p; ++i) {
            if (!((mask >> i) & 1)) continue;
            std::vector<Rat> row(n, Rat(0));
            row[pairs[i].first] += 1;
            row[pairs[i].second] += 1;
            a.push_back(std::move(row));
            rhs.push_back(m.d(pairs[i].first, pairs[i].second));
        }
        // Gaussian elimination; need a unique consistent solution.
        const int rows = static_cast<int>(a.size());
        std::vector<int> pivot_col;
        int r = 0;
        for (int c = 0; c < n && r < rows; ++c) {
            int piv = -1;
            for (int i = r; i < rows; ++i)
                if (a[i][c] != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) continue;
            std::swap(a[r], a[piv]);
            std::swap(rhs[r], rhs[piv]);
            for (int i = 0; i < rows; ++i) {
                if (i == r || a[i][c] == 0) continue;
                Rat f = a[i][c] / a[r][c];
                for (int j = c; j < n; ++j) a[i][j] -= f * a[r][j];
                rhs[i] -= f * rhs[r];
            }
            pivot_col.push_back(c);
            ++r;
        }
        if (r < n) continue;  // underdetermined
        bool consistent = true;
        for (int i = r; i < rows; ++i)
            if (rhs[i] != 0) consistent = false;
        if (!consistent) continue;
        std::vector<Rat> f(n);
        for (int i = 0; i < r; ++i) {
            f[pivot_col[i]] = rhs[i] / a[i][pivot_col[i]];
            f[pivot_col[i]].canonicalize();
        }
        if (hellylab::in_delta(m, f) && hellylab::is_extremal(m, f)) found.insert(f);
    }
    return {found.begin(), found.end()};
}

// ---------------------------------------------------------------------------
// Oracle: integer extremal functions by full grid scan. Usable up to ~6
// vertices (or scaled metrics of tiny graphs).
// ---------------------------------------------------------------------------

inline std::vector<std::vector<int>> oracle_integer_extremal(
    const std::vector<std::vector<int>>& dist) {
    const int n = static_cast<int>(dist.size());
    std::vector<int> ecc(n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) ecc[x] = std::max(ecc[x], dist[x][y]);
    std::vector<std::vector<int>> out;
    std::vector<int> f(n, 0);
    auto holds = [&]() {
        for (int x = 0; x < n; ++x) {
            int best = -f[x];
            for (int y = 0; y < n; ++y) best = std::max(best, dist[x][y] - f[y]);
            if (best != f[x]) return false;
        }
        return true;
    };
    while (true) {
        if (holds()) out.push_back(f);
        int i = 0;
        while (i < n && f[i] == ecc[i]) f[i++] = 0;
        if (i == n) break;
        ++f[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Oracle: Floyd-Warshall distances (independent of the BFS route).
// ---------------------------------------------------------------------------

inline std::vector<std::vector<int>> oracle_distances(const SimpleGraph& g) {
    const int n = g.size();
    const int inf = 1 << 20;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int v = 0; v < n; ++v) d[v][v] = 0;
    for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

// ---------------------------------------------------------------------------
// Brute-force graph isomorphism (backtracking on degree-compatible maps).
// ---------------------------------------------------------------------------

inline bool isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
    const int n = a.size();
    std::vector<int> da(n), db(n);
    for (int v = 0; v < n; ++v) {
        da[v] = static_cast<int>(a.neighbors(v).size());
        db[v] = static_cast<int>(b.neighbors(v).size());
    }
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<int> map(n, -1), used(n, 0);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (int w = 0; w < n; ++w) {
            if (used[w] || da[v] != db[w]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (a.adjacent(u, v) != b.adjacent(map[u], w)) ok = false;
            if (!ok) continue;
            map[v] = w;
            used[w] = 1;
            if (self(self, v + 1)) return true;
            used[w] = 0;
        }
        return false;
    };
    return rec(rec, 0);
}

// ---------------------------------------------------------------------------
// Enumeration of all connected graphs on exactly n unlabeled vertices
// (canonical form = lexicographically least adjacency bits over all
// permutations). Practical for n <= 6.
// ---------------------------------------------------------------------------

inline std::vector<SimpleGraph> connected_graphs_exactly(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    const int e = static_cast<int>(slots.size());
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::vector<std::vector<int>> perms;
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    std::set<long> canon_seen;
    std::vector<SimpleGraph> out;
    for (long mask = 0; mask < (1L << e); ++mask) {
        std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < e; ++i)
            if ((mask >> i) & 1) {
                adj[slots[i].first][slots[i].second] = adj[slots[i].second][slots[i].first] = 1;
                edges.push_back(slots[i]);
            }
        long canon = mask;
        for (const auto& p : perms) {
            long pm = 0;
            for (int i = 0; i < e; ++i)
                if (adj[p[slots[i].first]][p[slots[i].second]]) pm |= (1L << i);
            canon = std::min(canon, pm);
        }
        if (canon != mask) continue;  // not the canonical representative
        if (canon_seen.count(canon)) continue;
        auto g = SimpleGraph::from_edges(n, edges);
        if (!g.connected()) continue;
        canon_seen.insert(canon);
        out.push_back(std::move(g));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Seeded random generators.
// ---------------------------------------------------------------------------

inline SimpleGraph random_connected_graph(int n, double p, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    while (true) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin(rng) < p) edges.emplace_back(i, j);
        auto g = SimpleGraph::from_edges(n, edges);
        if (g.connected()) return g;
    }
}

// Random rational metric: shortest-path closure of random positive weights
// on the complete graph.
inline FiniteMetric random_rational_metric(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(1, 12);
    std::uniform_int_distribution<int> den(1, 3);
    std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rat w(num(rng), den(rng));
            w.canonicalize();
            d[i][j] = d[j][i] = w;
        }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) d[i][j] = std::min(d[i][j], Rat(d[i][k] + d[k][j]));
    return FiniteMetric::require(std::move(d));
}

}  // namespace testsupport
