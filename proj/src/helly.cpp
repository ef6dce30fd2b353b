#include "hellylab/helly.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "hellylab/errors.hpp"

namespace hellylab {

namespace {

int sup_dist_int(const std::vector<int>& a, const std::vector<int>& b) {
    int d = 0;
    for (size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

bool max_equation_holds(const std::vector<std::vector<int>>& dist, const std::vector<int>& f) {
    const int n = static_cast<int>(f.size());
    for (int x = 0; x < n; ++x) {
        int best = -f[x];
        for (int y = 0; y < n; ++y) best = std::max(best, dist[x][y] - f[y]);
        if (best != f[x]) return false;
    }
    return true;
}

}  // namespace

std::vector<std::vector<int>> integer_extremal_functions(
    const std::vector<std::vector<int>>& dist, const std::vector<int>& order, size_t solution_cap) {
    const int n = static_cast<int>(dist.size());
    std::vector<int> ecc(n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) ecc[x] = std::max(ecc[x], dist[x][y]);

    std::vector<int> lo(n, 0), hi(n);
    for (int x = 0; x < n; ++x) hi[x] = ecc[x];
    std::vector<int> f(n, -1);
    std::vector<std::vector<int>> out;

    // The max-equation at an assigned x needs some y with
    // f(y) = d(x,y) - f(x); the interval propagation already forces
    // f(y) >= d(x,y) - f(x), so the branch dies as soon as no vertex can
    // still realize equality.
    auto attainable = [&](int depth) {
        for (int d1 = 0; d1 <= depth; ++d1) {
            const int x = order[d1];
            if (f[x] == 0) continue;  // the y = x term already gives -f(x) = f(x)
            bool ok = false;
            for (int y = 0; y < n && !ok; ++y) {
                if (y == x) continue;
                int need = dist[x][y] - f[x];
                if (f[y] >= 0)
                    ok = (f[y] == need);
                else
                    ok = (lo[y] <= need && need <= hi[y]);
            }
            if (!ok) return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == n) {
            if (max_equation_holds(dist, f)) {
                out.push_back(f);
                if (out.size() > solution_cap)
                    throw BoundExceeded("hull enumeration exceeded solution cap");
            }
            return;
        }
        const int x = order[depth];
        const int save_lo = lo[x], save_hi = hi[x];
        for (int v = save_lo; v <= save_hi; ++v) {
            f[x] = v;
            // propagate |f(y) - v| <= d(x,y) and f(y) >= d(x,y) - v
            bool feasible = true;
            std::vector<std::pair<int, std::pair<int, int>>> touched;
            for (int d2 = depth + 1; d2 < n && feasible; ++d2) {
                const int y = order[d2];
                int nlo = std::max(lo[y], std::max(dist[x][y] - v, v - dist[x][y]));
                int nhi = std::min(hi[y], v + dist[x][y]);
                if (nlo != lo[y] || nhi != hi[y]) {
                    touched.push_back({y, {lo[y], hi[y]}});
                    lo[y] = nlo;
                    hi[y] = nhi;
                }
                if (lo[y] > hi[y]) feasible = false;
            }
            if (feasible && attainable(depth)) self(self, depth + 1);
            for (auto& [y, lohi] : touched) {
                lo[y] = lohi.first;
                hi[y] = lohi.second;
            }
        }
        f[x] = -1;
        lo[x] = save_lo;
        hi[x] = save_hi;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

HullResult helly_hull(const SimpleGraph& g, int bound) {
    if (g.size() > bound)
        throw BoundExceeded("graph has " + std::to_string(g.size()) +
                            " vertices, hull enumeration bound is " + std::to_string(bound));
    if (auto w = g.disconnected_witness())
        throw InputError("graph is disconnected: no path between " + std::to_string(w->first) +
                         " and " + std::to_string(w->second));
    auto dist = g.distance_matrix();
    auto functions = integer_extremal_functions(dist, g.bfs_order());

    HullResult res;
    res.functions = std::move(functions);
    const int h = static_cast<int>(res.functions.size());
    res.hull = SimpleGraph(h);
    for (int i = 0; i < h; ++i)
        for (int j = i + 1; j < h; ++j)
            if (sup_dist_int(res.functions[i], res.functions[j]) == 1) res.hull.add_edge(i, j);
    res.embedding.assign(g.size(), -1);
    for (int x = 0; x < g.size(); ++x) {
        auto it = std::lower_bound(res.functions.begin(), res.functions.end(), dist[x]);
        if (it == res.functions.end() || *it != dist[x])
            throw std::logic_error("Kuratowski image missing from hull enumeration");
        res.embedding[x] = static_cast<int>(it - res.functions.begin());
    }
    return res;
}

namespace {

struct BallFamily {
    std::vector<BallId> ids;
    std::vector<Bits> members;
};

// Every closed ball B(v, r), 0 <= r <= ecc(v).
BallFamily all_balls(const SimpleGraph& g, const std::vector<std::vector<int>>& dist) {
    const int n = g.size();
    BallFamily fam;
    for (int v = 0; v < n; ++v) {
        int ecc = 0;
        for (int u = 0; u < n; ++u) ecc = std::max(ecc, dist[v][u]);
        for (int r = 0; r <= ecc; ++r) {
            fam.ids.push_back({v, r});
            fam.members.push_back(SimpleGraph::ball(dist, n, v, r));
        }
    }
    return fam;
}

HellyVerdict helly_by_hull(const SimpleGraph& g, int hull_bound) {
    auto hull = helly_hull(g, hull_bound);
    auto dist = g.distance_matrix();
    for (const auto& f : hull.functions) {
        bool is_kuratowski = false;
        for (int x = 0; x < g.size() && !is_kuratowski; ++x)
            if (f == dist[x]) is_kuratowski = true;
        if (!is_kuratowski) {
            // The balls B(x, f(x)) pairwise intersect but have no common
            // vertex: a common vertex z would force e(z) <= f, contradicting
            // minimality of f.
            HellyVerdict v;
            v.helly = false;
            for (int x = 0; x < g.size(); ++x) v.witness.push_back({x, f[x]});
            return v;
        }
    }
    return {};
}

HellyVerdict helly_by_berge(const SimpleGraph& g, Exec exec) {
    const int n = g.size();
    auto dist = g.distance_matrix();
    auto fam = all_balls(g, dist);
    const int b = static_cast<int>(fam.ids.size());

    // triple (x,y,z) encoded as flat index; returns first failing triple
    std::vector<std::array<int, 3>> triples;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            for (int z = y + 1; z < n; ++z) triples.push_back({x, y, z});
    const int t = static_cast<int>(triples.size());
    std::vector<char> failed(t, 0);

    auto check_triple = [&](int ti) {
        auto [x, y, z] = triples[ti];
        Bits inter(n);
        inter.fill();
        bool nonempty_family = false;
        for (int i = 0; i < b; ++i) {
            int hits = fam.members[i].test(x) + fam.members[i].test(y) + fam.members[i].test(z);
            if (hits >= 2) {
                inter &= fam.members[i];
                nonempty_family = true;
            }
        }
        return nonempty_family && inter.none();
    };

    if (exec == Exec::Serial) {
        for (int i = 0; i < t; ++i)
            if ((failed[i] = check_triple(i))) break;
    } else {
#pragma omp parallel for schedule(dynamic, 16)
        for (int i = 0; i < t; ++i) failed[i] = check_triple(i);
    }
    for (int i = 0; i < t; ++i) {
        if (!failed[i]) continue;
        auto [x, y, z] = triples[i];
        HellyVerdict v;
        v.helly = false;
        for (int bi = 0; bi < b; ++bi) {
            int hits = fam.members[bi].test(x) + fam.members[bi].test(y) + fam.members[bi].test(z);
            if (hits >= 2) v.witness.push_back(fam.ids[bi]);
        }
        return v;
    }
    return {};
}

HellyVerdict helly_by_brute(const SimpleGraph& g, int brute_bound) {
    const int n = g.size();
    if (n > brute_bound)
        throw BoundExceeded("brute-force Helly search limited to " + std::to_string(brute_bound) +
                            " vertices");
    auto dist = g.distance_matrix();
    auto fam = all_balls(g, dist);

    // Deduplicate by member set and drop the full vertex set: a minimal
    // violating family only contains balls that strictly shrink the
    // running intersection.
    std::map<Bits, int> seen;
    std::vector<Bits> balls;
    std::vector<BallId> ids;
    for (size_t i = 0; i < fam.members.size(); ++i) {
        if (fam.members[i].count() == n) continue;
        if (seen.emplace(fam.members[i], 1).second) {
            balls.push_back(fam.members[i]);
            ids.push_back(fam.ids[i]);
        }
    }
    const int b = static_cast<int>(balls.size());
    std::vector<int> chosen;
    std::optional<std::vector<int>> found;

    auto rec = [&](auto&& self, int start, Bits inter) -> void {
        if (found) return;
        if (inter.none()) {
            found = chosen;
            return;
        }
        for (int i = start; i < b && !found; ++i) {
            bool pairwise = true;
            for (int c : chosen)
                if (!balls[i].intersects(balls[c])) {
                    pairwise = false;
                    break;
                }
            if (!pairwise) continue;
            Bits next = inter & balls[i];
            if (next == inter) continue;  // must strictly shrink
            chosen.push_back(i);
            self(self, i + 1, next);
            chosen.pop_back();
        }
    };
    Bits full(n);
    full.fill();
    rec(rec, 0, full);

    if (!found) return {};
    HellyVerdict v;
    v.helly = false;
    for (int i : *found) v.witness.push_back(ids[i]);
    return v;
}

}  // namespace

HellyVerdict is_helly(const SimpleGraph& g, IsHellyMethod method, int hull_bound, int brute_bound,
                      Exec exec) {
    if (auto w = g.disconnected_witness())
        throw InputError("graph is disconnected: no path between " + std::to_string(w->first) +
                         " and " + std::to_string(w->second));
    switch (method) {
        case IsHellyMethod::HullEquality:
            return helly_by_hull(g, hull_bound);
        case IsHellyMethod::BergeTriples:
            return helly_by_berge(g, exec);
        case IsHellyMethod::BruteForce:
            return helly_by_brute(g, brute_bound);
    }
    throw std::logic_error("unknown method");
}

CliqueHellyVerdict is_clique_helly(const SimpleGraph& g) {
    if (auto w = g.disconnected_witness())
        throw InputError("graph is disconnected: no path between " + std::to_string(w->first) +
                         " and " + std::to_string(w->second));
    const int n = g.size();
    auto cliques = maximal_cliques(g);
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            for (int z = y + 1; z < n; ++z) {
                Bits inter(n);
                inter.fill();
                bool any = false;
                for (const auto& c : cliques) {
                    int hits = c.test(x) + c.test(y) + c.test(z);
                    if (hits >= 2) {
                        inter &= c;
                        any = true;
                    }
                }
                if (any && inter.none()) {
                    CliqueHellyVerdict v;
                    v.clique_helly = false;
                    for (const auto& c : cliques) {
                        int hits = c.test(x) + c.test(y) + c.test(z);
                        if (hits >= 2) v.witness.push_back(c);
                    }
                    return v;
                }
            }
    return {};
}

Bits ball_closure(const SimpleGraph& g, const std::vector<std::vector<int>>& dist, const Bits& s) {
    const int n = g.size();
    if (s.none()) throw InputError("ball closure of an empty set");
    Bits out(n);
    out.fill();
    for (int v = 0; v < n; ++v) {
        int ecc = 0, need = 0;
        for (int u = 0; u < n; ++u) ecc = std::max(ecc, dist[v][u]);
        s.for_each([&](int u) { need = std::max(need, dist[v][u]); });
        // B(v, r) contains s iff r >= need; the tightest such ball suffices.
        if (need <= ecc) out &= SimpleGraph::ball(dist, n, v, need);
    }
    return out;
}

namespace {

bool is_clique(const SimpleGraph& g, const Bits& s) {
    auto m = s.members();
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = i + 1; j < m.size(); ++j)
            if (!g.adjacent(m[i], m[j])) return false;
    return true;
}

std::vector<Bits> sorted_unique(std::vector<Bits> v) {
    std::sort(v.begin(), v.end(), [](const Bits& a, const Bits& b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return a.members() < b.members();
    });
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

RoundCliquePoset round_cliques(const SimpleGraph& g) {
    if (auto w = g.disconnected_witness())
        throw InputError("graph is disconnected: no path between " + std::to_string(w->first) +
                         " and " + std::to_string(w->second));
    const int n = g.size();
    auto dist = g.distance_matrix();

    RoundCliquePoset res;
    res.input_helly = is_helly(g, IsHellyMethod::BergeTriples).helly;

    // Description 1: ball-closed cliques.
    std::vector<Bits> closed;
    for (const auto& c : all_cliques(g))
        if (ball_closure(g, dist, c) == c) closed.push_back(c);
    closed = sorted_unique(std::move(closed));

    // Description 2: X ∪ {nonempty intersections of maximal cliques}.
    std::vector<Bits> inter_desc;
    for (int v = 0; v < n; ++v) {
        Bits s(n);
        s.set(v);
        inter_desc.push_back(s);
    }
    auto maxc = maximal_cliques(g);
    std::vector<Bits> family = maxc;
    for (size_t i = 0; i < family.size(); ++i)
        for (const auto& c : maxc) {
            Bits meet = family[i] & c;
            if (meet.none()) continue;
            if (std::find(family.begin(), family.end(), meet) == family.end())
                family.push_back(meet);
        }
    for (auto& s : family) inter_desc.push_back(s);
    inter_desc = sorted_unique(std::move(inter_desc));

    res.descriptions_agree = (closed == inter_desc);
    res.cliques = std::move(closed);

    // Hasse relation of the inclusion order.
    const int k = static_cast<int>(res.cliques.size());
    auto leq = [&](int i, int j) { return res.cliques[i].subset_of(res.cliques[j]); };
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j || !leq(i, j)) continue;
            bool cover = true;
            for (int mid = 0; mid < k && cover; ++mid)
                if (mid != i && mid != j && leq(i, mid) && leq(mid, j)) cover = false;
            if (cover) res.hasse.emplace_back(i, j);
        }
    return res;
}

Bits circumclique(const SimpleGraph& g, const Bits& k) {
    if (k.none()) throw InputError("circumclique of an empty set");
    auto verdict = is_helly(g, IsHellyMethod::BergeTriples);
    if (!verdict.helly) throw NotHellyError("circumclique requires a Helly graph");
    const int n = g.size();
    auto dist = g.distance_matrix();

    Bits cur = ball_closure(g, dist, k);
    while (true) {
        int diam = 0;
        auto mem = cur.members();
        for (size_t i = 0; i < mem.size(); ++i)
            for (size_t j = i + 1; j < mem.size(); ++j) diam = std::max(diam, dist[mem[i]][mem[j]]);
        if (diam <= 1) break;
        int half = (diam + 1) / 2;
        Bits shrunk = cur;
        for (int x : mem) shrunk &= SimpleGraph::ball(dist, n, x, half);
        if (shrunk.none()) throw std::logic_error("circumclique iteration emptied on Helly input");
        // Keep the centers: points whose eccentricity within `shrunk` is minimal.
        auto smem = shrunk.members();
        int best = n + 1;
        std::vector<int> radii(smem.size(), 0);
        for (size_t i = 0; i < smem.size(); ++i) {
            for (size_t j = 0; j < smem.size(); ++j)
                radii[i] = std::max(radii[i], dist[smem[i]][smem[j]]);
            best = std::min(best, radii[i]);
        }
        Bits next(n);
        for (size_t i = 0; i < smem.size(); ++i)
            if (radii[i] == best) next.set(smem[i]);
        cur = next;
    }
    if (!is_clique(g, cur)) throw std::logic_error("circumclique result is not a clique");
    return cur;
}

int coarse_helly_gap(const SimpleGraph& g, int bound) {
    auto hull = helly_hull(g, bound);
    auto dist = g.distance_matrix();
    int gap = 0;
    for (const auto& f : hull.functions) {
        int best = INT32_MAX;
        for (int x = 0; x < g.size(); ++x) best = std::min(best, sup_dist_int(f, dist[x]));
        gap = std::max(gap, best);
    }
    return gap;
}

int interval_stability_bound(const SimpleGraph& g, Exec exec) {
    const int n = g.size();
    auto dist = g.distance_matrix();
    auto interval_of = [&](int x, int y) {
        std::vector<int> iv;
        for (int z = 0; z < n; ++z)
            if (dist[x][z] + dist[z][y] == dist[x][y]) iv.push_back(z);
        return iv;
    };
    std::vector<int> per_x(n, 0);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
    for (int x = 0; x < n; ++x) {
        int best = 0;
        for (int y = 0; y < n; ++y) {
            auto ixy = interval_of(x, y);
            for (int z : g.neighbors(y)) {
                auto ixz = interval_of(x, z);
                int h = 0;
                for (int p : ixy) {
                    int closest = INT32_MAX;
                    for (int q : ixz) closest = std::min(closest, dist[p][q]);
                    h = std::max(h, closest);
                }
                best = std::max(best, h);
            }
        }
        per_x[x] = best;
    }
    int out = 0;
    for (int v : per_x) out = std::max(out, v);
    return out;
}

}  // namespace hellylab
