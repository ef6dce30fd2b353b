#include "hellylab/complexes.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>

#include "hellylab/errors.hpp"

namespace hellylab {

CellComplexSpec CellComplexSpec::checked(SimpleGraph g, std::vector<Bits> cells) {
    const int n = g.size();
    Bits covered(n);
    for (const auto& c : cells) {
        if (c.none()) throw InputError("empty generalized cell");
        if (c.universe() != n) throw InputError("cell universe does not match graph");
        covered |= c;
    }
    if (covered.count() != n) throw InputError("cells do not cover every vertex");
    return CellComplexSpec{std::move(g), std::move(cells)};
}

SimpleGraph thickening(const CellComplexSpec& c) {
    SimpleGraph t(c.graph.size());
    for (const auto& cell : c.cells) {
        auto m = cell.members();
        for (size_t i = 0; i < m.size(); ++i)
            for (size_t j = i + 1; j < m.size(); ++j) t.add_edge(m[i], m[j]);
    }
    return t;
}

namespace {

bool induced_connected(const SimpleGraph& g, const Bits& s) {
    auto m = s.members();
    if (m.empty()) return true;
    Bits seen(g.size());
    std::vector<int> stack{m[0]};
    seen.set(m[0]);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v))
            if (s.test(u) && !seen.test(u)) {
                seen.set(u);
                stack.push_back(u);
            }
    }
    for (int v : m)
        if (!seen.test(v)) return false;
    return true;
}

// Pairwise-intersecting subfamily with empty intersection, if any
// (minimal witnesses shrink the running intersection at every step).
std::optional<std::vector<int>> family_helly_violation(const std::vector<Bits>& cells, int universe) {
    std::vector<int> chosen;
    std::optional<std::vector<int>> found;
    const int k = static_cast<int>(cells.size());
    auto rec = [&](auto&& self, int start, Bits inter) -> void {
        if (found) return;
        if (inter.none()) {
            found = chosen;
            return;
        }
        for (int i = start; i < k && !found; ++i) {
            bool pairwise = true;
            for (int c : chosen)
                if (!cells[i].intersects(cells[c])) {
                    pairwise = false;
                    break;
                }
            if (!pairwise) continue;
            Bits next = inter & cells[i];
            if (next == inter) continue;
            chosen.push_back(i);
            self(self, i + 1, next);
            chosen.pop_back();
        }
    };
    Bits full(universe);
    full.fill();
    rec(rec, 0, full);
    return found;
}

}  // namespace

CellHellyReport cell_helly_check(const CellComplexSpec& c) {
    CellHellyReport rep;
    const int n = c.graph.size();

    for (size_t i = 0; i < c.cells.size(); ++i)
        if (!induced_connected(c.graph, c.cells[i])) {
            rep.cells_connected = false;
            rep.disconnected_cell = static_cast<int>(i);
            break;
        }
    for (size_t i = 0; i < c.cells.size() && rep.intersections_connected; ++i)
        for (size_t j = i + 1; j < c.cells.size(); ++j) {
            Bits meet = c.cells[i] & c.cells[j];
            if (meet.any() && !induced_connected(c.graph, meet)) {
                rep.intersections_connected = false;
                rep.disconnected_intersection = {static_cast<int>(i), static_cast<int>(j)};
                break;
            }
        }
    for (auto [u, v] : c.graph.edges()) {
        bool covered = false;
        for (const auto& cell : c.cells)
            if (cell.test(u) && cell.test(v)) {
                covered = true;
                break;
            }
        if (!covered) {
            rep.edges_covered = false;
            break;
        }
    }

    if (auto w = family_helly_violation(c.cells, n)) {
        rep.family_helly = false;
        rep.helly_witness = *w;
    }

    const int k = static_cast<int>(c.cells.size());
    for (int i = 0; i < k && rep.flag_condition; ++i)
        for (int j = i + 1; j < k && rep.flag_condition; ++j) {
            if (!c.cells[i].intersects(c.cells[j])) continue;
            for (int l = j + 1; l < k; ++l) {
                if (!c.cells[i].intersects(c.cells[l]) || !c.cells[j].intersects(c.cells[l])) continue;
                Bits uni = (c.cells[i] & c.cells[j]) | (c.cells[j] & c.cells[l]) |
                           (c.cells[i] & c.cells[l]);
                bool contained = false;
                for (const auto& cell : c.cells)
                    if (uni.subset_of(cell)) {
                        contained = true;
                        break;
                    }
                if (!contained) {
                    rep.flag_condition = false;
                    rep.flag_witness = std::array<int, 3>{i, j, l};
                    break;
                }
            }
        }
    return rep;
}

SimpleGraph gen_cycle(int n) {
    if (n < 3) throw InputError("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return SimpleGraph::from_edges(n, e);
}

SimpleGraph gen_path(int n) {
    if (n < 1) throw InputError("path needs at least 1 vertex");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return SimpleGraph::from_edges(n, e);
}

SimpleGraph gen_complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return SimpleGraph::from_edges(n, e);
}

SimpleGraph gen_star(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return SimpleGraph::from_edges(leaves + 1, e);
}

namespace {

SimpleGraph gen_box(const std::vector<int>& dims, bool king) {
    if (dims.empty()) throw InputError("need at least one dimension");
    int total = 1;
    for (int d : dims) {
        if (d < 1) throw InputError("dimensions must be positive");
        total *= d;
        if (total > 100000) throw BoundExceeded("grid too large");
    }
    auto coords = [&](int idx) {
        std::vector<int> c(dims.size());
        for (size_t i = 0; i < dims.size(); ++i) {
            c[i] = idx % dims[i];
            idx /= dims[i];
        }
        return c;
    };
    std::vector<std::pair<int, int>> e;
    for (int a = 0; a < total; ++a) {
        auto ca = coords(a);
        for (int b = a + 1; b < total; ++b) {
            auto cb = coords(b);
            int linf = 0, l1 = 0;
            for (size_t i = 0; i < dims.size(); ++i) {
                linf = std::max(linf, std::abs(ca[i] - cb[i]));
                l1 += std::abs(ca[i] - cb[i]);
            }
            if (king ? (linf == 1) : (l1 == 1)) e.emplace_back(a, b);
        }
    }
    return SimpleGraph::from_edges(total, e);
}

}  // namespace

SimpleGraph gen_king(const std::vector<int>& dims) { return gen_box(dims, true); }
SimpleGraph gen_grid(const std::vector<int>& dims) { return gen_box(dims, false); }

SimpleGraph gen_sun() {
    // hubs 0,1,2 form a triangle; outer vertex 3+i adjacent to hubs i, i+1
    std::vector<std::pair<int, int>> e{{0, 1}, {1, 2}, {0, 2}, {3, 0}, {3, 1}, {4, 1}, {4, 2}, {5, 0}, {5, 2}};
    return SimpleGraph::from_edges(6, e);
}

SimpleGraph gen_random_tree(int n, uint64_t seed) {
    if (n < 1) throw InputError("tree needs at least 1 vertex");
    if (n == 1) return SimpleGraph(1);
    if (n == 2) return SimpleGraph::from_edges(2, {{0, 1}});
    std::mt19937_64 rng(seed);
    std::vector<int> prufer(n - 2);
    for (auto& x : prufer) x = static_cast<int>(rng() % n);
    std::vector<int> degree(n, 1);
    for (int x : prufer) ++degree[x];
    std::vector<std::pair<int, int>> e;
    Bits used(n);
    for (int x : prufer) {
        for (int leaf = 0; leaf < n; ++leaf)
            if (degree[leaf] == 1 && !used.test(leaf)) {
                e.emplace_back(leaf, x);
                used.set(leaf);
                --degree[x];
                break;
            }
    }
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (!used.test(v) && degree[v] == 1) rest.push_back(v);
    e.emplace_back(rest[0], rest[1]);
    return SimpleGraph::from_edges(n, e);
}

namespace {

// All faces (subcubes) of an axis-aligned box complex described by squares
// on an integer grid; vertices are shared via coordinates.
struct ComplexBuilder {
    std::map<std::vector<int>, int> vertex_ids;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> cells;  // vertex id lists

    int vertex(const std::vector<int>& c) {
        return vertex_ids.emplace(c, static_cast<int>(vertex_ids.size())).first->second;
    }

    // A square spanned at base b in coordinate directions d1 < d2.
    void add_square(std::vector<int> base, int d1, int d2) {
        std::vector<int> ids;
        for (int m = 0; m < 4; ++m) {
            auto c = base;
            if (m & 1) ++c[d1];
            if (m & 2) ++c[d2];
            ids.push_back(vertex(c));
        }
        edges.emplace_back(ids[0], ids[1]);
        edges.emplace_back(ids[0], ids[2]);
        edges.emplace_back(ids[1], ids[3]);
        edges.emplace_back(ids[2], ids[3]);
        cells.push_back({ids[0], ids[1], ids[3], ids[2]});
        cells.push_back({ids[0], ids[1]});
        cells.push_back({ids[0], ids[2]});
        cells.push_back({ids[1], ids[3]});
        cells.push_back({ids[2], ids[3]});
        for (int id : ids) cells.push_back({id});
    }

    CellComplexSpec finish() {
        const int n = static_cast<int>(vertex_ids.size());
        auto g = SimpleGraph::from_edges(n, edges);
        std::vector<Bits> bs;
        for (auto& c : cells) bs.push_back(Bits::of(n, c));
        std::sort(bs.begin(), bs.end(), [](const Bits& a, const Bits& b) {
            if (a.count() != b.count()) return a.count() < b.count();
            return a.members() < b.members();
        });
        bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
        return CellComplexSpec::checked(std::move(g), std::move(bs));
    }
};

CellComplexSpec build_cube() {
    ComplexBuilder b;
    std::vector<int> all_ids;
    for (int m = 0; m < 8; ++m) all_ids.push_back(b.vertex({m & 1, (m >> 1) & 1, (m >> 2) & 1}));
    // edges and squares of the cube
    for (int m = 0; m < 8; ++m)
        for (int d = 0; d < 3; ++d)
            if (!((m >> d) & 1)) b.edges.emplace_back(all_ids[m], all_ids[m | (1 << d)]);
    for (int d1 = 0; d1 < 3; ++d1)
        for (int d2 = d1 + 1; d2 < 3; ++d2)
            for (int lo = 0; lo < 2; ++lo) {
                int d3 = 3 - d1 - d2;
                std::vector<int> base(3, 0);
                base[d3] = lo;
                std::vector<int> ids;
                for (int m = 0; m < 4; ++m) {
                    auto c = base;
                    if (m & 1) ++c[d1];
                    if (m & 2) ++c[d2];
                    ids.push_back(b.vertex(c));
                }
                b.cells.push_back(ids);
            }
    for (int m = 0; m < 8; ++m)
        for (int d = 0; d < 3; ++d)
            if (!((m >> d) & 1)) b.cells.push_back({all_ids[m], all_ids[m | (1 << d)]});
    for (int id : all_ids) b.cells.push_back({id});
    b.cells.push_back(all_ids);  // the 3-cube itself
    return b.finish();
}

}  // namespace

CellComplexSpec gen_cube_complex(const std::string& name) {
    if (name == "cube") return build_cube();
    if (name == "two-squares") {
        ComplexBuilder b;
        b.add_square({0, 0}, 0, 1);
        b.add_square({1, 0}, 0, 1);
        return b.finish();
    }
    if (name == "corner3") {
        ComplexBuilder b;
        b.add_square({0, 0, 0}, 0, 1);
        b.add_square({0, 0, 0}, 0, 2);
        b.add_square({0, 0, 0}, 1, 2);
        return b.finish();
    }
    if (name == "tree-of-squares") {
        ComplexBuilder b;
        b.add_square({0, 0}, 0, 1);
        b.add_square({1, 0}, 0, 1);
        b.add_square({2, 0}, 0, 1);
        return b.finish();
    }
    throw InputError("unknown cube complex fixture: " + name);
}

}  // namespace hellylab
