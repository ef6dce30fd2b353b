#include "hellylab/lattice.hpp"

#include <algorithm>
#include <map>

#include "hellylab/errors.hpp"
#include "hellylab/garside.hpp"

namespace hellylab {

LatticeWindow zd_window(int dims, int extent) {
    if (dims < 1 || extent < 1) throw InputError("window needs dims >= 1 and extent >= 1");
    int total = 1;
    for (int i = 0; i < dims; ++i) {
        total *= extent + 1;
        if (total > 20000) throw BoundExceeded("lattice window too large");
    }
    auto coords = [&](int idx) {
        std::vector<int> c(dims);
        for (int i = 0; i < dims; ++i) {
            c[i] = idx % (extent + 1);
            idx /= extent + 1;
        }
        return c;
    };
    LatticeWindow w;
    w.leq.assign(total, Bits(total));
    w.up.assign(total, std::nullopt);
    w.down.assign(total, std::nullopt);
    w.depth.assign(total, 0);
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < total; ++i) {
        auto c = coords(i);
        std::string name;
        for (int v : c) name += (name.empty() ? "" : ",") + std::to_string(v);
        w.names.push_back("(" + name + ")");
        index[c] = i;
    }
    for (int a = 0; a < total; ++a) {
        auto ca = coords(a);
        int depth = extent;
        for (int v : ca) depth = std::min({depth, v, extent - v});
        w.depth[a] = depth;
        for (int b = 0; b < total; ++b) {
            auto cb = coords(b);
            bool le = true;
            for (int i = 0; i < dims; ++i)
                if (ca[i] > cb[i]) le = false;
            if (le) w.leq[a].set(b);
        }
        auto up = ca, down = ca;
        bool has_up = true, has_down = true;
        for (auto& v : up)
            if (++v > extent) has_up = false;
        for (auto& v : down)
            if (--v < 0) has_down = false;
        if (has_up) w.up[a] = index[up];
        if (has_down) w.down[a] = index[down];
    }
    return w;
}

LatticeWindow b3_window(int k) {
    if (k < 1 || k > 3) throw BoundExceeded("b3 window supports k in 1..3");
    // Elements with inf >= -k and sup <= k, enumerated via normal forms.
    std::vector<b3::Element> elems;
    for (long p = -k; p <= k; ++p) {
        std::vector<std::vector<int>> seqs{{}};
        for (int len = 0; len + p <= k; ++len) {
            for (const auto& seq : seqs)
                elems.push_back(b3::Element{p, seq});
            if (len + p == k) break;
            std::vector<std::vector<int>> next;
            for (const auto& seq : seqs)
                for (int s : {1, 2, 3, 4}) {
                    auto cand = seq;
                    cand.push_back(s);
                    // keep only sequences that are already left-weighted
                    auto renorm = b3::mult(b3::Element{0, seq}, b3::simple(s));
                    if (renorm == b3::Element{0, cand}) next.push_back(cand);
                }
            seqs = std::move(next);
        }
    }
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());

    const int n = static_cast<int>(elems.size());
    LatticeWindow w;
    w.leq.assign(n, Bits(n));
    w.up.assign(n, std::nullopt);
    w.down.assign(n, std::nullopt);
    w.depth.assign(n, 0);
    std::map<b3::Element, int> index;
    for (int i = 0; i < n; ++i) {
        w.names.push_back(b3::label(elems[i]));
        index[elems[i]] = i;
    }
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (b3::leq_left(elems[a], elems[b])) w.leq[a].set(b);
        long lo = b3::inf(elems[a]), hi = b3::sup(elems[a]);
        w.depth[a] = static_cast<int>(std::min(lo + k, k - hi));
        auto up = b3::mult(elems[a], b3::delta_power(1));
        auto down = b3::mult(elems[a], b3::delta_power(-1));
        if (auto it = index.find(up); it != index.end()) w.up[a] = it->second;
        if (auto it = index.find(down); it != index.end()) w.down[a] = it->second;
    }
    return w;
}

LatticeGraphResult lattice_to_graph(const LatticeWindow& w) {
    const int n = w.size();
    LatticeGraphResult res;
    res.core = Bits(n);
    for (int v = 0; v < n; ++v)
        if (w.depth[v] >= 1) res.core.set(v);
    if (res.core.none()) {
        int starving = 0;
        for (int v = 0; v < n; ++v)
            if (w.depth[v] < 1) starving = v;
        throw InputError("window too small: vertex " + w.names[starving] +
                         " lacks its full neighbor set");
    }

    res.graph = SimpleGraph(n);
    for (int x = 0; x < n; ++x) {
        if (!w.up[x] || !w.down[x]) continue;
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            if (w.leq[*w.down[x]].test(y) && w.leq[y].test(*w.up[x])) res.graph.add_edge(x, y);
        }
    }

    // Order distance d(x,y) = min{t : x - t <= y <= x + t}, walked via the
    // shift as far as the window allows.
    auto order_distance = [&](int x, int y, int cap) -> std::optional<int> {
        int lo = x, hi = x;
        for (int t = 0; t <= cap; ++t) {
            if (w.leq[lo].test(y) && w.leq[y].test(hi)) return t;
            if (!w.down[lo] || !w.up[hi]) return std::nullopt;
            lo = *w.down[lo];
            hi = *w.up[hi];
        }
        return std::nullopt;
    };

    // Graph distances on the full window graph.
    std::vector<std::vector<int>> gdist(n);
    for (int v = 0; v < n; ++v) gdist[v] = res.graph.bfs_from(v);

    for (int x = 0; x < n && res.distance_check; ++x)
        for (int y = 0; y < n; ++y) {
            int margin = std::min(w.depth[x], w.depth[y]);
            if (margin < 1) continue;
            auto od = order_distance(x, y, margin);
            if (!od) continue;  // farther apart than the window certifies
            if (gdist[x][y] != *od) {
                res.distance_check = false;
                res.distance_failure = {x, y};
                break;
            }
        }

    // Induced core subgraph and its Helly verdict.
    res.core_index.assign(n, -1);
    int k = 0;
    res.core.for_each([&](int v) { res.core_index[v] = k++; });
    res.core_graph = SimpleGraph(k);
    for (auto [u, v] : res.graph.edges())
        if (res.core_index[u] >= 0 && res.core_index[v] >= 0)
            res.core_graph.add_edge(res.core_index[u], res.core_index[v]);
    res.interior_helly = is_helly(res.core_graph, IsHellyMethod::BergeTriples);
    return res;
}

}  // namespace hellylab
