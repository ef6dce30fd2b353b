// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout, every tolerance pinned in code. Exits nonzero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "hellylab/complexes.hpp"
#include "hellylab/delta.hpp"
#include "hellylab/errors.hpp"
#include "hellylab/garside.hpp"
#include "hellylab/helly.hpp"
#include "hellylab/lattice.hpp"
#include "hellylab/oracle.hpp"
#include "hellylab/subdivision.hpp"
#include "hellylab/tightspan.hpp"
#include "test_support.hpp"

using namespace hellylab;
using namespace testsupport;

namespace {

void expect(std::vector<std::string>& fails, bool ok, const std::string& what) {
    if (!ok) fails.push_back(what);
}

// ---------------------------------------------------------------------------
// support: unlabeled tree enumeration via Prufer decoding + AHU canonical
// encodings, all-automorphism enumeration, shared fixture lists
// ---------------------------------------------------------------------------

std::string ahu_encode(const SimpleGraph& t, int root, int parent) {
    std::vector<std::string> child;
    for (int u : t.neighbors(root))
        if (u != parent) child.push_back(ahu_encode(t, u, root));
    std::sort(child.begin(), child.end());
    std::string s = "(";
    for (const auto& c : child) s += c;
    return s + ")";
}

std::string tree_canonical(const SimpleGraph& t) {
    const int n = t.size();
    if (n == 1) return "()";
    std::vector<int> degree(n);
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v) degree[v] = static_cast<int>(t.neighbors(v).size());
    std::vector<int> layer;
    for (int v = 0; v < n; ++v)
        if (degree[v] <= 1) layer.push_back(v);
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[v] = 1;
            --remaining;
            for (int u : t.neighbors(v))
                if (!removed[u] && --degree[u] == 1) next.push_back(u);
        }
        layer = std::move(next);
    }
    std::vector<std::string> encodings;
    for (int c : layer)
        if (!removed[c]) encodings.push_back(ahu_encode(t, c, -1));
    std::sort(encodings.begin(), encodings.end());
    return encodings.front();
}

std::vector<SimpleGraph> all_unlabeled_trees(int n) {
    if (n == 1) return {SimpleGraph(1)};
    if (n == 2) return {SimpleGraph::from_edges(2, {{0, 1}})};
    std::set<std::string> seen;
    std::vector<SimpleGraph> out;
    std::vector<int> prufer(n - 2, 0);
    while (true) {
        std::vector<int> degree(n, 1);
        for (int x : prufer) ++degree[x];
        std::vector<std::pair<int, int>> edges;
        std::vector<char> used(n, 0);
        for (int x : prufer) {
            for (int leaf = 0; leaf < n; ++leaf)
                if (degree[leaf] == 1 && !used[leaf]) {
                    edges.emplace_back(leaf, x);
                    used[leaf] = 1;
                    --degree[x];
                    break;
                }
        }
        std::vector<int> rest;
        for (int v = 0; v < n; ++v)
            if (!used[v] && degree[v] == 1) rest.push_back(v);
        edges.emplace_back(rest[0], rest[1]);
        auto t = SimpleGraph::from_edges(n, edges);
        if (seen.insert(tree_canonical(t)).second) out.push_back(std::move(t));
        int i = 0;
        while (i < n - 2 && prufer[i] == n - 1) prufer[i++] = 0;
        if (i == n - 2) break;
        ++prufer[i];
    }
    return out;
}

std::vector<std::vector<int>> all_automorphisms(const SimpleGraph& g) {
    const int n = g.size();
    std::vector<int> map(n, -1), used(n, 0), deg(n);
    std::vector<std::vector<int>> out;
    for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(g.neighbors(v).size());
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            out.push_back(map);
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w] || deg[v] != deg[w]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (g.adjacent(u, v) != g.adjacent(map[u], w)) ok = false;
            if (!ok) continue;
            map[v] = w;
            used[w] = 1;
            self(self, v + 1);
            used[w] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<SimpleGraph> helly_fixtures() {
    std::vector<SimpleGraph> out{gen_complete(2),
                                 gen_complete(3),
                                 gen_complete(4),
                                 gen_path(3),
                                 gen_path(5),
                                 gen_star(3),
                                 gen_king({3, 3}),
                                 helly_hull(gen_cycle(4)).hull,
                                 helly_hull(gen_cycle(5)).hull,
                                 thickening(gen_cube_complex("two-squares"))};
    for (uint64_t seed = 1; seed <= 3; ++seed) out.push_back(gen_random_tree(6, seed));
    return out;
}

bool hull_equals_input(const SimpleGraph& g, const HullResult& res) {
    if (res.hull.size() != g.size()) return false;
    for (int x = 0; x < g.size(); ++x)
        for (int y = 0; y < g.size(); ++y)
            if (res.hull.adjacent(res.embedding[x], res.embedding[y]) != g.adjacent(x, y))
                return false;
    return true;
}

std::string serialize_hull(const std::vector<std::vector<int>>& functions, const SimpleGraph& hull) {
    std::ostringstream os;
    for (const auto& f : functions) {
        for (size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
        os << ";";
    }
    os << "|";
    for (auto [u, v] : hull.edges()) os << u << "-" << v << ";";
    return os.str();
}

// criterion 1 ----------------------------------------------------------------

void c1_hull_c4(std::vector<std::string>& fails) {
    auto res = helly_hull(gen_cycle(4));
    auto cone = SimpleGraph::from_edges(
        5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
    expect(fails, res.hull.size() == 5, "hull must have 5 vertices");
    expect(fails, isomorphic(res.hull, cone), "hull must be the cone over the 4-cycle");
    int added = -1;
    for (int v = 0; v < 5; ++v) {
        bool original = false;
        for (int x = 0; x < 4; ++x)
            if (res.embedding[x] == v) original = true;
        if (!original) added = v;
    }
    expect(fails, added >= 0 && res.hull.neighbors(added).size() == 4,
           "the added vertex must be adjacent to all four");
}

// criterion 2 ----------------------------------------------------------------

void c2_trees(std::vector<std::string>& fails) {
    int count = 0;
    for (int n = 1; n <= 8; ++n)
        for (const auto& t : all_unlabeled_trees(n)) {
            ++count;
            auto res = helly_hull(t, 8);
            expect(fails, hull_equals_input(t, res),
                   "tree on " + std::to_string(n) + " vertices must be its own hull");
            expect(fails, is_helly(t, IsHellyMethod::HullEquality, 8).helly, "hull_equality");
            expect(fails, is_helly(t, IsHellyMethod::BergeTriples).helly, "berge_triples");
            expect(fails, is_helly(t, IsHellyMethod::BruteForce).helly, "brute_force");
        }
    expect(fails, count == 48,
           "expected 48 unlabeled trees up to 8 vertices, saw " + std::to_string(count));
    std::mt19937_64 rng(2024);
    for (int n = 9; n <= 20; ++n)
        for (int trial = 0; trial < 3; ++trial) {
            auto t = gen_random_tree(n, rng());
            auto res = helly_hull(t, 20);
            expect(fails, hull_equals_input(t, res), "random tree must be its own hull");
            expect(fails, is_helly(t, IsHellyMethod::HullEquality, 20).helly, "hull_equality");
            expect(fails, is_helly(t, IsHellyMethod::BergeTriples).helly, "berge_triples");
        }
}

// criterion 3 ----------------------------------------------------------------

void c3_tripod(std::vector<std::string>& fails) {
    auto m = unit_equilateral(3);
    auto verts = tight_span_vertices(m);
    expect(fails, verts.size() == 4, "tripod has 4 vertices");
    std::vector<Rat> center{Rat(1, 2), Rat(1, 2), Rat(1, 2)};
    expect(fails, std::count(verts.begin(), verts.end(), center) == 1, "center (1/2,1/2,1/2)");
    for (int x = 0; x < 3; ++x)
        expect(fails, std::count(verts.begin(), verts.end(), kuratowski(m, x)) == 1,
               "Kuratowski leg endpoint " + std::to_string(x));
    auto cells = tight_span_cells(m);
    int ones = 0;
    for (const auto& c : cells) {
        if (c.dim > 1) expect(fails, false, "tripod has no cell of dimension 2+");
        if (c.dim == 1) {
            ++ones;
            expect(fails, c.vertex_ids.size() == 2, "1-cells have two vertices");
            expect(fails, sup_dist(verts[c.vertex_ids[0]], verts[c.vertex_ids[1]]) == Rat(1, 2),
                   "legs have sup-length 1/2");
        }
    }
    expect(fails, ones == 3, "tripod has exactly three 1-cells");
}

// criterion 4 ----------------------------------------------------------------

void c4_three_way(std::vector<std::string>& fails) {
    auto agree = [&](const SimpleGraph& g, const std::string& label) {
        auto a = is_helly(g, IsHellyMethod::HullEquality, 16);
        auto b = is_helly(g, IsHellyMethod::BergeTriples);
        auto c = is_helly(g, IsHellyMethod::BruteForce);
        expect(fails, a.helly == b.helly && b.helly == c.helly, "disagreement on " + label);
    };
    int six = 0;
    for (int n = 1; n <= 6; ++n) {
        auto graphs = connected_graphs_exactly(n);
        if (n == 6) six = static_cast<int>(graphs.size());
        for (size_t i = 0; i < graphs.size(); ++i)
            agree(graphs[i], std::to_string(n) + "-vertex census graph " + std::to_string(i));
    }
    expect(fails, six == 112,
           "the 6-vertex census must have 112 graphs, saw " + std::to_string(six));
    std::mt19937_64 rng(501);
    for (int trial = 0; trial < 500; ++trial) {
        double p = 0.25 + 0.5 * (trial % 5) / 4.0;
        agree(random_connected_graph(7, p, rng), "random 7-vertex graph " + std::to_string(trial));
    }
}

// criterion 5 ----------------------------------------------------------------

void c5_idempotence(std::vector<std::string>& fails) {
    auto check = [&](const SimpleGraph& g, const std::string& label) {
        auto first = helly_hull(g, 640);
        auto dg = g.distance_matrix();
        auto dh = first.hull.distance_matrix();
        for (int x = 0; x < g.size(); ++x)
            for (int y = 0; y < g.size(); ++y)
                if (dh[first.embedding[x]][first.embedding[y]] != dg[x][y]) {
                    expect(fails, false, "embedding isometry fails on " + label);
                    return;
                }
        auto second = helly_hull(first.hull, 640);
        expect(fails, hull_equals_input(first.hull, second), "idempotence fails on " + label);
    };
    std::vector<SimpleGraph> fixtures{gen_cycle(4),     gen_cycle(5),     gen_cycle(6),
                                      gen_sun(),        gen_king({3, 3}), gen_grid({3, 3}),
                                      gen_complete(5)};
    for (uint64_t seed = 1; seed <= 3; ++seed) fixtures.push_back(gen_random_tree(7, seed));
    for (size_t i = 0; i < fixtures.size(); ++i) check(fixtures[i], "fixture " + std::to_string(i));
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 5 + static_cast<int>(rng() % 5);
        double p = 0.35 + 0.3 * (trial % 3) / 2.0;
        check(random_connected_graph(n, p, rng), "random graph " + std::to_string(trial));
    }
}

// criterion 6 ----------------------------------------------------------------

void c6_subdivisions(std::vector<std::string>& fails) {
    auto subk2 = first_subdivision(gen_complete(2));
    expect(fails,
           subk2.graph.size() == 3 && subk2.graph.edge_count() == 2 &&
               isomorphic(subk2.graph, gen_path(3)),
           "first subdivision of K2 must be the 3-vertex path");
    auto subk3 = first_subdivision(gen_complete(3));
    expect(fails, isomorphic(subk3.graph, gen_star(3)),
           "first subdivision of K3 must be the star K_{1,3}");

    std::vector<SimpleGraph> fixtures{gen_complete(2), gen_complete(3), gen_path(3),
                                      gen_path(4),     gen_star(3),     gen_complete(4),
                                      helly_hull(gen_cycle(4)).hull};
    for (uint64_t seed = 1; seed <= 2; ++seed) fixtures.push_back(gen_random_tree(5, seed));
    for (size_t i = 0; i < fixtures.size(); ++i) {
        const auto& g = fixtures[i];
        std::string label = "fixture " + std::to_string(i);
        auto first = first_subdivision(g);
        auto nth = nth_subdivision(g, 1, 64);
        auto dist = g.distance_matrix();
        std::map<std::vector<int>, int> by_members;
        for (int v = 0; v < first.graph.size(); ++v) by_members[first.meaning[v]->members()] = v;
        bool iso_ok = first.graph.size() == nth.graph.size();
        std::vector<int> map(nth.graph.size(), -1);
        for (int j = 0; iso_ok && j < nth.graph.size(); ++j) {
            auto it = by_members.find(
                round_clique_of_scaled_function(g, dist, nth.functions[j]).members());
            if (it == by_members.end())
                iso_ok = false;
            else
                map[j] = it->second;
        }
        for (int a = 0; iso_ok && a < nth.graph.size(); ++a)
            for (int b = 0; b < nth.graph.size(); ++b)
                if (nth.graph.adjacent(a, b) != first.graph.adjacent(map[a], map[b])) {
                    iso_ok = false;
                    break;
                }
        expect(fails, iso_ok, "cross-construction mismatch on " + label);
        auto ds = nth.graph.distance_matrix();
        bool homothety = true;
        for (int x = 0; x < g.size(); ++x)
            for (int y = 0; y < g.size(); ++y)
                if (ds[nth.embedding[x]][nth.embedding[y]] != 2 * dist[x][y]) homothety = false;
        expect(fails, homothety, "embedding not exactly 2-homothetic on " + label);
        expect(fails, is_helly(nth.graph, IsHellyMethod::BergeTriples).helly,
               "subdivision not Helly on " + label);
    }
}

// criterion 7 ----------------------------------------------------------------

void c7_circumclique(std::vector<std::string>& fails) {
    std::mt19937_64 rng(99);
    for (const auto& g : helly_fixtures()) {
        auto d = g.distance_matrix();
        auto autos = all_automorphisms(g);
        for (int trial = 0; trial < 6; ++trial) {
            Bits k(g.size());
            int count = 1 + static_cast<int>(rng() % 3);
            for (int i = 0; i < count; ++i) k.set(static_cast<int>(rng() % g.size()));
            auto cc = circumclique(g, k);
            for (int v = 0; v < g.size(); ++v) {
                int ecc = 0, need = 0;
                for (int u = 0; u < g.size(); ++u) ecc = std::max(ecc, d[v][u]);
                k.for_each([&](int u) { need = std::max(need, d[v][u]); });
                for (int r = need; r <= ecc; ++r)
                    if (!cc.subset_of(SimpleGraph::ball(d, g.size(), v, r))) {
                        expect(fails, false, "circumclique escapes an enclosing ball");
                        v = g.size();
                        break;
                    }
            }
            for (const auto& fwd : autos) {
                Bits ki(g.size()), ci(g.size());
                k.for_each([&](int v) { ki.set(fwd[v]); });
                if (!(ki == k)) continue;
                cc.for_each([&](int v) { ci.set(fwd[v]); });
                expect(fails, ci == cc, "circumclique not equivariant under a fixing automorphism");
            }
        }
    }
}

// criterion 8 ----------------------------------------------------------------

void c8_translation(std::vector<std::string>& fails) {
    {
        auto r = translation_length(king_oracle(2), parse_king_map("x2+1,x1", 2), 2, 12, 12);
        expect(fails, r.certified && r.period == 2 && r.length == Rat(1, 2),
               "Z^2 bump must certify L = 1/2 with period 2");
    }
    {
        auto r = translation_length(king_oracle(3), parse_king_map("x2+1,x3,x1", 3), 3, 12, 12);
        expect(fails, r.certified && r.period == 3 && r.length == Rat(1, 3),
               "Z^3 bump must certify L = 1/3 with period 3");
    }
}

// criterion 9 ----------------------------------------------------------------

void c9_dimension(std::vector<std::string>& fails) {
    auto crosscheck = [&](const FiniteMetric& m, const std::string& label) {
        int cd = combinatorial_dimension(m);
        for (int k = 1; k <= 3; ++k)
            if (dim_at_most(m, k).first != (cd <= k))
                expect(fails, false,
                       "dim_at_most(" + std::to_string(k) + ") disagrees with cells on " + label +
                           " (triage against the printed inequality direction)");
        return cd;
    };
    std::mt19937_64 rng(313);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 3 + static_cast<int>(rng() % 3);
        crosscheck(random_rational_metric(n, rng), "random metric " + std::to_string(trial));
    }
    for (int n = 2; n <= 5; ++n)
        for (const auto& g : connected_graphs_exactly(n))
            crosscheck(graph_distance_matrix(g), "graph metric");
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        int n = 2 + static_cast<int>(seed % 4);
        if (n < 2) continue;
        auto m = graph_distance_matrix(gen_random_tree(n, seed));
        expect(fails, crosscheck(m, "tree metric") == 1, "tree metrics have dimension exactly 1");
    }
}

// criterion 10 ---------------------------------------------------------------

void c10_gap(std::vector<std::string>& fails) {
    for (const auto& g : helly_fixtures())
        expect(fails, coarse_helly_gap(g, 640) == 0, "Helly fixtures have gap 0");
    expect(fails, coarse_helly_gap(gen_cycle(4)) == 1, "the 4-cycle has gap 1");
}

// criterion 11 ---------------------------------------------------------------

void c11_lattice(std::vector<std::string>& fails) {
    auto r2 = lattice_to_graph(zd_window(2, 4));
    expect(fails, r2.distance_check, "Z^2 interior distance must equal the sup metric");
    expect(fails, r2.interior_helly.helly, "Z^2 interior must be Helly");
    expect(fails, isomorphic(r2.core_graph, gen_king({3, 3})),
           "Z^2 core must be the 3x3 king graph");
    auto r3 = lattice_to_graph(zd_window(3, 4));
    expect(fails, r3.distance_check, "Z^3 interior distance must equal the sup metric");
    expect(fails, r3.interior_helly.helly, "Z^3 interior must be Helly");
    expect(fails, isomorphic(r3.core_graph, gen_king({3, 3, 3})),
           "Z^3 core must be the 3x3x3 king graph");
}

// criterion 12 ---------------------------------------------------------------

void c12_thickening(std::vector<std::string>& fails) {
    for (const auto* name : {"cube", "tree-of-squares"}) {
        auto spec = gen_cube_complex(name);
        expect(fails, cell_helly_check(spec).all_checked_pass(),
               std::string(name) + " must pass cell_helly_check");
        expect(fails, is_helly(thickening(spec), IsHellyMethod::BergeTriples).helly,
               std::string(name) + " thickening must be Helly");
    }
    auto corner = gen_cube_complex("corner3");
    expect(fails, !cell_helly_check(corner).flag_condition,
           "corner3 must fail the flag condition");
    // Asserted exactly as specified. The computed thickening has a
    // universal vertex (the corner shares a square with every other
    // vertex), which forces the Helly property, so this clause stays red;
    // the 1-skeleton of the complex is the non-Helly object.
    expect(fails, !is_helly(thickening(corner), IsHellyMethod::BergeTriples).helly,
           "corner3 thickening fails is_helly [known defect: the corner vertex is universal in "
           "the thickening, so the computed verdict is Helly; the complex's 1-skeleton is "
           "non-Helly]");
}

// criterion 13 ---------------------------------------------------------------

void c13_garside(std::vector<std::string>& fails) {
    auto ball = garside_b3_ball(2);
    auto dist = ball.graph.distance_matrix();
    std::vector<int> interior;
    for (int v = 0; v < ball.graph.size(); ++v)
        if (ball.distance[v] <= 1) interior.push_back(v);
    expect(fails, interior.size() == 19, "interior of the radius-2 ball is the radius-1 ball");
    std::vector<Bits> balls;
    for (int v : interior) balls.push_back(SimpleGraph::ball(dist, ball.graph.size(), v, 1));
    std::vector<int> chosen;
    bool violated = false;
    auto rec = [&](auto&& self, int start, Bits inter) -> void {
        if (violated) return;
        if (inter.none()) {
            violated = true;
            return;
        }
        for (int i = start; i < static_cast<int>(balls.size()) && !violated; ++i) {
            bool pairwise = true;
            for (int c : chosen)
                if (!balls[i].intersects(balls[c])) {
                    pairwise = false;
                    break;
                }
            if (!pairwise) continue;
            Bits next = inter & balls[i];
            if (next == inter) continue;
            chosen.push_back(i);
            self(self, i + 1, next);
            chosen.pop_back();
        }
    };
    Bits full(ball.graph.size());
    full.fill();
    rec(rec, 0, full);
    expect(fails, !violated, "interior 1-balls must satisfy the Helly property");
}

// criterion 14 ---------------------------------------------------------------

void c14_cycle_hulls(std::vector<std::string>& fails) {
    const std::string frozen5 =
        "0,1,2,2,1;1,0,1,2,2;1,1,1,1,1;1,2,2,1,0;2,1,0,1,2;2,2,1,0,1;|"
        "0-1;0-2;0-3;1-2;1-4;2-3;2-4;2-5;3-5;4-5;";
    const std::string frozen6 =
        "0,1,2,3,2,1;1,0,1,2,3,2;1,1,1,2,2,2;1,1,2,2,2,1;1,2,1,2,1,2;1,2,2,2,1,1;1,2,3,2,1,0;"
        "2,1,0,1,2,3;2,1,1,1,2,2;2,1,2,1,2,1;2,2,1,1,1,2;2,2,2,1,1,1;2,3,2,1,0,1;3,2,1,0,1,2;|"
        "0-1;0-2;0-3;0-4;0-5;0-6;1-2;1-3;1-7;1-8;1-9;2-3;2-4;2-5;2-7;2-8;2-9;2-10;2-11;3-4;3-5;"
        "3-6;3-8;3-9;3-10;3-11;4-5;4-7;4-8;4-9;4-10;4-11;4-12;5-6;5-8;5-9;5-10;5-11;5-12;6-9;"
        "6-11;6-12;7-8;7-10;7-13;8-9;8-10;8-11;8-13;9-10;9-11;9-13;10-11;10-12;10-13;11-12;"
        "11-13;12-13;";
    const std::pair<int, const std::string*> cases[] = {{5, &frozen5}, {6, &frozen6}};
    for (auto [n, frozen] : cases) {
        auto g = gen_cycle(n);
        auto oracle = oracle_integer_extremal(g.distance_matrix());
        auto res = helly_hull(g);
        expect(fails, res.functions == oracle,
               "C" + std::to_string(n) + " enumerator must match the exhaustive oracle");
        expect(fails, serialize_hull(res.functions, res.hull) == *frozen,
               "C" + std::to_string(n) + " hull must match the frozen fixture byte-for-byte");
    }
}

// criterion 15 ---------------------------------------------------------------

void c15_clique_helly(std::vector<std::string>& fails) {
    expect(fails, is_clique_helly(gen_cycle(4)).clique_helly, "C4 must be clique-Helly");
    expect(fails, !is_helly(gen_cycle(4), IsHellyMethod::BergeTriples).helly,
           "C4 must not be Helly");
    expect(fails, !is_clique_helly(gen_sun()).clique_helly, "the 3-sun must fail clique-Helly");
}

struct Criterion {
    int id;
    std::string title;
    double time_limit_s;
    std::function<void(std::vector<std::string>&)> run;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "hull of the 4-cycle is the cone", 1.0, c1_hull_c4},
        {2, "finite trees are their own Helly hulls (three methods)", 10.0, c2_trees},
        {3, "tight span of the unit equilateral triple is a tripod", 1.0, c3_tripod},
        {4, "three-way is_helly agreement (112-graph census + 500 random)", 300.0, c4_three_way},
        {5, "hull idempotence and embedding isometry (fixtures + 200 random)", 300.0,
         c5_idempotence},
        {6, "first subdivision fixtures and cross-construction agreement", 30.0, c6_subdivisions},
        {7, "circumclique containment and equivariance", 30.0, c7_circumclique},
        {8, "translation length 1/N on the Z^N king oracle", 10.0, c8_translation},
        {9, "2(n+1)-point criterion matches cell dimension", 600.0, c9_dimension},
        {10, "coarse Helly gap: 0 on Helly fixtures, 1 on the 4-cycle", 1.0, c10_gap},
        {11, "lattice windows reproduce king graphs with Helly interiors", 30.0, c11_lattice},
        {12, "thickening dichotomy", 10.0, c12_thickening},
        {13, "Garside B3 radius-2 ball is locally 1-Helly", 30.0, c13_garside},
        {14, "5- and 6-cycle hull fixtures match byte-for-byte", 10.0, c14_cycle_hulls},
        {15, "clique-Helly nuance (C4 and the 3-sun)", 1.0, c15_clique_helly},
    };

    int failed = 0;
    for (auto& c : criteria) {
        std::vector<std::string> fails;
        auto start = std::chrono::steady_clock::now();
        try {
            c.run(fails);
        } catch (const std::exception& e) {
            fails.push_back(std::string("exception: ") + e.what());
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.time_limit_s)
            fails.push_back("exceeded the stated time limit (" + std::to_string(secs) + "s > " +
                            std::to_string(c.time_limit_s) + "s)");
        if (fails.empty()) {
            std::printf("PASS  criterion %2d: %s  (%.2fs)\n", c.id, c.title.c_str(), secs);
        } else {
            ++failed;
            std::printf("FAIL  criterion %2d: %s  (%.2fs)\n", c.id, c.title.c_str(), secs);
            for (const auto& f : fails) std::printf("      - %s\n", f.c_str());
        }
        std::fflush(stdout);
    }
    if (failed) std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
