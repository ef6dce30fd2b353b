#include "hellylab/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <sstream>

#include "hellylab/errors.hpp"

namespace hellylab {

GraphOracle king_oracle(int dims) {
    if (dims < 1) throw InputError("king oracle needs dimension >= 1");
    GraphOracle o;
    o.basepoint.assign(dims, 0);
    o.neighbors = [dims](const GraphOracle::Vertex& v) {
        std::vector<GraphOracle::Vertex> out;
        std::vector<int> delta(dims, -1);
        while (true) {
            bool all_zero = true;
            for (int d : delta)
                if (d) all_zero = false;
            if (!all_zero) {
                auto w = v;
                for (int i = 0; i < dims; ++i) w[i] += delta[i];
                out.push_back(std::move(w));
            }
            int i = 0;
            while (i < dims && delta[i] == 1) delta[i++] = -1;
            if (i == dims) break;
            ++delta[i];
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    return o;
}

GraphOracle tree_oracle(int degree) {
    if (degree < 2) throw InputError("tree oracle needs degree >= 2");
    // Vertices are reduced words over `degree` involution generators (the
    // Cayley graph of a free product of Z/2s), which is the d-regular tree.
    GraphOracle o;
    o.basepoint = {};
    o.neighbors = [degree](const GraphOracle::Vertex& v) {
        std::vector<GraphOracle::Vertex> out;
        for (int64_t g = 0; g < degree; ++g) {
            auto w = v;
            if (!w.empty() && w.back() == g)
                w.pop_back();
            else
                w.push_back(g);
            out.push_back(std::move(w));
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    return o;
}

OracleMap parse_king_map(const std::string& spec, int dims) {
    std::vector<int> perm(dims, -1);
    std::vector<int64_t> offset(dims, 0);
    std::stringstream ss(spec);
    std::string part;
    int idx = 0;
    while (std::getline(ss, part, ',')) {
        if (idx >= dims) throw InputError("map has more components than the oracle dimension");
        std::string s;
        for (char c : part)
            if (!isspace(static_cast<unsigned char>(c))) s += c;
        if (s.empty() || s[0] != 'x') throw InputError("map component must look like xK, xK+c or xK-c");
        size_t p = 1;
        while (p < s.size() && isdigit(static_cast<unsigned char>(s[p]))) ++p;
        if (p == 1) throw InputError("map component missing coordinate index: " + part);
        int coord = std::stoi(s.substr(1, p - 1));
        if (coord < 1 || coord > dims) throw InputError("coordinate out of range in map: " + part);
        int64_t c = 0;
        if (p < s.size()) {
            if (s[p] != '+' && s[p] != '-') throw InputError("bad offset in map component: " + part);
            c = std::stoll(s.substr(p));
        }
        perm[idx] = coord - 1;
        offset[idx] = c;
        ++idx;
    }
    if (idx != dims) throw InputError("map has fewer components than the oracle dimension");
    std::vector<int> inv(dims, -1);
    for (int i = 0; i < dims; ++i) {
        if (inv[perm[i]] != -1) throw InputError("map reuses a coordinate; not a bijection");
        inv[perm[i]] = i;
    }
    OracleMap m;
    m.forward = [perm, offset, dims](const GraphOracle::Vertex& v) {
        GraphOracle::Vertex w(dims);
        for (int i = 0; i < dims; ++i) w[i] = v[perm[i]] + offset[i];
        return w;
    };
    m.backward = [perm, offset, dims, inv](const GraphOracle::Vertex& v) {
        GraphOracle::Vertex w(dims);
        for (int i = 0; i < dims; ++i) w[perm[i]] = v[i] - offset[i];
        return w;
    };
    return m;
}

OracleMap parse_tree_map(const std::string& spec, int degree) {
    std::vector<int64_t> word;
    for (char c : spec) {
        if (isspace(static_cast<unsigned char>(c))) continue;
        if (!isdigit(static_cast<unsigned char>(c)))
            throw InputError("tree map is a word over generator digits, e.g. \"01\"");
        int64_t g = c - '0';
        if (g >= degree) throw InputError("tree map generator out of range");
        word.push_back(g);
    }
    if (word.empty()) throw InputError("empty tree map word");
    auto apply = [](const std::vector<int64_t>& w, const GraphOracle::Vertex& v) {
        // left multiplication with free reduction
        GraphOracle::Vertex out;
        auto push = [&out](int64_t g) {
            if (!out.empty() && out.back() == g)
                out.pop_back();
            else
                out.push_back(g);
        };
        for (auto g : w) push(g);
        for (auto g : v) push(g);
        return out;
    };
    auto reversed = word;
    std::reverse(reversed.begin(), reversed.end());  // generators are involutions
    OracleMap m;
    m.forward = [word, apply](const GraphOracle::Vertex& v) { return apply(word, v); };
    m.backward = [reversed, apply](const GraphOracle::Vertex& v) { return apply(reversed, v); };
    return m;
}

std::optional<int> oracle_distance(const GraphOracle& o, const GraphOracle::Vertex& a,
                                   const GraphOracle::Vertex& b, int max_radius) {
    if (a == b) return 0;
    std::map<GraphOracle::Vertex, int> da{{a, 0}}, db{{b, 0}};
    std::deque<GraphOracle::Vertex> qa{a}, qb{b};
    int best = INT32_MAX;
    int ra = 0, rb = 0;
    auto expand = [&](std::map<GraphOracle::Vertex, int>& mine,
                      std::map<GraphOracle::Vertex, int>& other,
                      std::deque<GraphOracle::Vertex>& q, int radius) {
        std::deque<GraphOracle::Vertex> nq;
        while (!q.empty()) {
            auto v = q.front();
            q.pop_front();
            for (auto& w : o.neighbors(v)) {
                auto it = mine.find(w);
                if (it == mine.end()) {
                    mine.emplace(w, radius);
                    auto ot = other.find(w);
                    if (ot != other.end()) best = std::min(best, radius + ot->second);
                    nq.push_back(std::move(w));
                }
            }
        }
        q = std::move(nq);
    };
    while (ra + rb < 2 * max_radius) {
        if (qa.size() <= qb.size()) {
            if (ra >= max_radius) {
                if (qb.empty() || rb >= max_radius) break;
                expand(db, da, qb, ++rb);
            } else
                expand(da, db, qa, ++ra);
        } else {
            if (rb >= max_radius)
                expand(da, db, qa, ++ra);
            else
                expand(db, da, qb, ++rb);
        }
        if (best <= ra + rb) return best;
        if (qa.empty() && qb.empty()) break;
    }
    if (best != INT32_MAX) return best;
    return std::nullopt;
}

TranslationResult translation_length(const GraphOracle& o, const OracleMap& map, int dim_bound,
                                     int horizon, int window_radius) {
    if (horizon < 1) throw InputError("horizon must be >= 1");
    if (dim_bound < 1) throw InputError("dimension bound must be >= 1");
    TranslationResult res;
    res.orbit_distances.assign(horizon, -1);

    auto v = o.basepoint;
    auto w = v;
    int last_defined = 0;
    for (int k = 1; k <= horizon; ++k) {
        w = map.forward(w);
        auto d = oracle_distance(o, v, w, window_radius);
        if (!d) {
            res.window_exhausted = true;
            break;
        }
        res.orbit_distances[k - 1] = *d;
        last_defined = k;
    }
    if (last_defined == 0) {
        res.window_exhausted = true;
        res.estimate = 0;
        res.length = 0;
        return res;
    }
    res.estimate = Rat(res.orbit_distances[last_defined - 1], last_defined);
    res.estimate.canonicalize();

    // Certificate: smallest period a <= 2 * dim_bound with d_{a n} = n * L
    // across the whole computed tail, with at least two multiples observed.
    for (int a = 1; a <= 2 * dim_bound; ++a) {
        if (2 * a > last_defined) break;
        long L = res.orbit_distances[a - 1];
        if (L == 0) {
            // bounded orbit: certified elliptic, length 0
            bool all_zero = true;
            for (int nmul = 1; nmul * a <= last_defined; ++nmul)
                if (res.orbit_distances[nmul * a - 1] != 0) all_zero = false;
            if (!all_zero) continue;
            res.certified = true;
            res.period = a;
            res.increment = 0;
            res.length = 0;
            return res;
        }
        bool ok = true;
        for (int nmul = 1; nmul * a <= last_defined; ++nmul)
            if (res.orbit_distances[nmul * a - 1] != nmul * L) {
                ok = false;
                break;
            }
        if (ok) {
            res.certified = true;
            res.period = a;
            res.increment = L;
            res.length = Rat(L, a);
            res.length.canonicalize();
            return res;
        }
    }
    res.length = res.estimate;
    return res;
}

}  // namespace hellylab
