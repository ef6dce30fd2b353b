#include "hellylab/subdivision.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "hellylab/errors.hpp"

namespace hellylab {

namespace {

void require_helly(const SimpleGraph& g, const char* op) {
    auto v = is_helly(g, IsHellyMethod::BergeTriples);
    if (!v.helly) throw NotHellyError(std::string(op) + " requires a Helly graph");
}

int sup_dist_int(const std::vector<int>& a, const std::vector<int>& b) {
    int d = 0;
    for (size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

}  // namespace

Bits round_clique_of_scaled_function(const SimpleGraph& g,
                                     const std::vector<std::vector<int>>& dist,
                                     const std::vector<int>& f) {
    const int n = g.size();
    Bits out(n);
    out.fill();
    for (int x = 0; x < n; ++x) {
        int radius = (f[x] + 1) / 2;  // ceil of the half-integer distance d(p, x) = f(x)/2
        out &= SimpleGraph::ball(dist, n, x, radius);
    }
    return out;
}

SubdivisionResult first_subdivision(const SimpleGraph& g) {
    require_helly(g, "first_subdivision");
    auto poset = round_cliques(g);
    const int k = static_cast<int>(poset.cliques.size());

    SubdivisionResult res;
    res.scale = 2;
    res.graph = SimpleGraph(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const Bits& s = poset.cliques[i];
            const Bits& t = poset.cliques[j];
            if (!s.intersects(t)) continue;
            Bits uni = s | t;
            bool clique = true;
            auto mem = uni.members();
            for (size_t a = 0; a < mem.size() && clique; ++a)
                for (size_t b = a + 1; b < mem.size(); ++b)
                    if (!g.adjacent(mem[a], mem[b])) {
                        clique = false;
                        break;
                    }
            if (clique) res.graph.add_edge(i, j);
        }

    auto dist = g.distance_matrix();
    res.meaning.resize(k);
    res.embedding.assign(g.size(), -1);
    for (int i = 0; i < k; ++i) {
        res.meaning[i] = poset.cliques[i];
        if (poset.cliques[i].count() == 1) res.embedding[poset.cliques[i].first()] = i;
    }
    // Scaled extremal function of a round clique: members are pairwise
    // adjacent, so d(x, z) takes at most two consecutive values over z in
    // sigma and 2 d_inf(e(x), p_sigma) = min + max.
    res.functions.resize(k);
    for (int i = 0; i < k; ++i) {
        std::vector<int> f(g.size());
        for (int x = 0; x < g.size(); ++x) {
            int mn = INT32_MAX, mx = 0;
            poset.cliques[i].for_each([&](int z) {
                mn = std::min(mn, dist[x][z]);
                mx = std::max(mx, dist[x][z]);
            });
            f[x] = mn + mx;  // twice the sup-metric distance from e(x) to the cell point
        }
        res.functions[i] = std::move(f);
    }
    return res;
}

SubdivisionResult nth_subdivision(const SimpleGraph& g, int n_factor, int bound) {
    if (n_factor < 1) throw InputError("subdivision order must be >= 1");
    require_helly(g, "nth_subdivision");
    long scale = 2;
    for (int i = 2; i <= n_factor; ++i) scale *= i;
    if (scale * g.size() > bound)
        throw BoundExceeded("subdivision size " + std::to_string(scale * g.size()) +
                            " exceeds bound " + std::to_string(bound));
    auto dist = g.distance_matrix();
    std::vector<std::vector<int>> scaled(g.size(), std::vector<int>(g.size()));
    for (int i = 0; i < g.size(); ++i)
        for (int j = 0; j < g.size(); ++j) scaled[i][j] = static_cast<int>(scale) * dist[i][j];

    SubdivisionResult res;
    res.scale = static_cast<int>(scale);
    res.functions = integer_extremal_functions(scaled, g.bfs_order());
    const int k = static_cast<int>(res.functions.size());
    res.graph = SimpleGraph(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (sup_dist_int(res.functions[i], res.functions[j]) == 1) res.graph.add_edge(i, j);

    res.meaning.resize(k);
    if (n_factor == 1)
        for (int i = 0; i < k; ++i)
            res.meaning[i] = round_clique_of_scaled_function(g, dist, res.functions[i]);

    res.embedding.assign(g.size(), -1);
    for (int x = 0; x < g.size(); ++x) {
        auto it = std::lower_bound(res.functions.begin(), res.functions.end(), scaled[x]);
        if (it == res.functions.end() || *it != scaled[x])
            throw std::logic_error("scaled Kuratowski image missing from subdivision");
        res.embedding[x] = static_cast<int>(it - res.functions.begin());
    }
    return res;
}

GraphAutomorphism GraphAutomorphism::checked(const SimpleGraph& g, std::vector<int> forward) {
    const int n = g.size();
    if (static_cast<int>(forward.size()) != n)
        throw InputError("automorphism must map all " + std::to_string(n) + " vertices");
    std::vector<int> backward(n, -1);
    for (int v = 0; v < n; ++v) {
        if (forward[v] < 0 || forward[v] >= n) throw InputError("automorphism image out of range");
        if (backward[forward[v]] != -1) throw InputError("automorphism is not injective");
        backward[forward[v]] = v;
    }
    for (auto [u, v] : g.edges()) {
        if (!g.adjacent(forward[u], forward[v]))
            throw InputError("not an automorphism: edge " + std::to_string(u) + "-" +
                             std::to_string(v) + " maps to a non-edge");
        if (!g.adjacent(backward[u], backward[v]))
            throw InputError("not an automorphism: preimage of edge " + std::to_string(u) + "-" +
                             std::to_string(v) + " is a non-edge");
    }
    return GraphAutomorphism{std::move(forward), std::move(backward)};
}

EllipticCertificate classify_automorphism(const SimpleGraph& g, const GraphAutomorphism& a) {
    require_helly(g, "classify_automorphism");
    const int n = g.size();
    // Orbit of vertex 0 under the cyclic group generated by a.
    Bits orbit(n);
    int v = 0;
    do {
        orbit.set(v);
        v = a.forward[v];
    } while (v != 0);

    Bits sigma = circumclique(g, orbit);
    Bits image(n);
    sigma.for_each([&](int u) { image.set(a.forward[u]); });
    if (!(image == sigma)) throw std::logic_error("circumclique not stabilized by automorphism");

    auto poset = round_cliques(g);
    int idx = -1;
    for (size_t i = 0; i < poset.cliques.size(); ++i)
        if (poset.cliques[i] == sigma) idx = static_cast<int>(i);
    if (idx < 0) throw std::logic_error("stabilized clique missing from round-clique poset");
    return EllipticCertificate{sigma, idx};
}

std::vector<int> induced_subdivision_automorphism(const SimpleGraph& g,
                                                  const SubdivisionResult& sub,
                                                  const GraphAutomorphism& a) {
    const int k = sub.graph.size();
    std::vector<int> out(k, -1);
    for (int i = 0; i < k; ++i) {
        if (!sub.meaning[i]) throw InputError("subdivision lacks round-clique rendering");
        Bits image(g.size());
        sub.meaning[i]->for_each([&](int u) { image.set(a.forward[u]); });
        int target = -1;
        for (int j = 0; j < k; ++j)
            if (sub.meaning[j] && *sub.meaning[j] == image) target = j;
        if (target < 0) throw std::logic_error("automorphism does not permute round cliques");
        out[i] = target;
    }
    return out;
}

}  // namespace hellylab
