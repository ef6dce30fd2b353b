#include "hellylab/tightspan.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hellylab/bitset.hpp"
#include "hellylab/delta.hpp"
#include "hellylab/errors.hpp"

namespace hellylab {

namespace {

// ---------------------------------------------------------------------------
// Constraint system of the polyhedron P = {f : f(x)+f(y) >= d(x,y) for all
// x <= y}. Index layout: 0..n-1 loop constraints f(x) >= 0, then pairs
// (x,y) with x < y in lex order.
// ---------------------------------------------------------------------------

struct ConstraintSystem {
    int n = 0;
    std::vector<std::pair<int, int>> pairs;  // constraint index -> (x, y), x <= y

    explicit ConstraintSystem(int n_) : n(n_) {
        for (int x = 0; x < n; ++x) pairs.emplace_back(x, x);
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y) pairs.emplace_back(x, y);
    }
    int count() const { return static_cast<int>(pairs.size()); }

    Rat slack(const FiniteMetric& m, const std::vector<Rat>& f, int c) const {
        auto [x, y] = pairs[c];
        if (x == y) return f[x];
        return f[x] + f[y] - m.d(x, y);
    }

    Bits active_set(const FiniteMetric& m, const std::vector<Rat>& f) const {
        Bits b(count());
        for (int c = 0; c < count(); ++c)
            if (slack(m, f, c) == 0) b.set(c);
        return b;
    }

    bool covers_all_points(const Bits& a) const {
        Bits seen(n);
        a.for_each([&](int c) {
            seen.set(pairs[c].first);
            seen.set(pairs[c].second);
        });
        return seen.count() == n;
    }

    // Rank of the linear system {f(x)+f(y) = const} over the pairs in `a`.
    int rank(const Bits& a) const {
        std::vector<std::vector<Rat>> rows;
        a.for_each([&](int c) {
            std::vector<Rat> r(n, Rat(0));
            r[pairs[c].first] += 1;
            r[pairs[c].second] += 1;
            rows.push_back(std::move(r));
        });
        int rank = 0;
        for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
            int piv = -1;
            for (int i = rank; i < static_cast<int>(rows.size()); ++i)
                if (rows[i][col] != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) continue;
            std::swap(rows[rank], rows[piv]);
            for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
                if (i == rank || rows[i][col] == 0) continue;
                Rat factor = rows[i][col] / rows[rank][col];
                for (int j = col; j < n; ++j) rows[i][j] -= factor * rows[rank][j];
            }
            ++rank;
        }
        return rank;
    }
};

// ---------------------------------------------------------------------------
// Double description over the homogenized cone in R^{n+1}: coordinates
// (f_0, ..., f_{n-1}, t) with constraints f_x >= 0, t >= 0 and
// f_x + f_y - d(x,y) t >= 0. The first n+1 axis constraints carve the
// nonnegative orthant, whose extreme rays are the unit vectors; the pair
// constraints are then inserted one at a time. The cone stays pointed
// throughout, so the combinatorial adjacency test applies.
// ---------------------------------------------------------------------------

struct Ray {
    std::vector<Rat> v;  // length n+1
    Bits zero;           // active homogeneous constraints among 0..c
};

void normalize_ray(std::vector<Rat>& v) {
    mpz_class lcm_den = 1;
    for (const auto& q : v) lcm_den = lcm(lcm_den, q.get_den());
    mpz_class gcd_num = 0;
    for (auto& q : v) {
        q *= Rat(lcm_den);
        q.canonicalize();
        gcd_num = gcd(gcd_num, q.get_num());
    }
    if (gcd_num > 1)
        for (auto& q : v) {
            q /= Rat(gcd_num);
            q.canonicalize();
        }
}

class DoubleDescription {
public:
    explicit DoubleDescription(const FiniteMetric& m) : m_(m), n_(m.size()) {
        for (int x = 0; x < n_; ++x)
            for (int y = x + 1; y < n_; ++y) pairs_.emplace_back(x, y);
        total_ = n_ + 1 + static_cast<int>(pairs_.size());
        for (int i = 0; i <= n_; ++i) {
            Ray r;
            r.v.assign(n_ + 1, Rat(0));
            r.v[i] = 1;
            r.zero = Bits(total_);
            for (int c = 0; c <= n_; ++c)
                if (c != i) r.zero.set(c);
            rays_.push_back(std::move(r));
        }
    }

    void run(size_t ray_cap) {
        for (int c = n_ + 1; c < total_; ++c) step(c, ray_cap);
    }

    std::vector<std::vector<Rat>> vertices() const {
        std::vector<std::vector<Rat>> out;
        for (const auto& r : rays_) {
            if (r.v[n_] == 0) continue;
            std::vector<Rat> f(n_);
            for (int i = 0; i < n_; ++i) {
                f[i] = r.v[i] / r.v[n_];
                f[i].canonicalize();
            }
            out.push_back(std::move(f));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    int recession_ray_count() const {
        int c = 0;
        for (const auto& r : rays_)
            if (r.v[n_] == 0) ++c;
        return c;
    }

private:
    Rat eval(int constraint, const std::vector<Rat>& v) const {
        if (constraint < n_) return v[constraint];
        if (constraint == n_) return v[n_];
        auto [x, y] = pairs_[constraint - n_ - 1];
        return v[x] + v[y] - m_.d(x, y) * v[n_];
    }

    void step(int c, size_t ray_cap) {
        std::vector<int> pos, zer, neg;
        std::vector<Rat> vals(rays_.size());
        for (size_t i = 0; i < rays_.size(); ++i) {
            vals[i] = eval(c, rays_[i].v);
            if (vals[i] > 0)
                pos.push_back(static_cast<int>(i));
            else if (vals[i] == 0)
                zer.push_back(static_cast<int>(i));
            else
                neg.push_back(static_cast<int>(i));
        }
        if (neg.empty()) {
            for (int i : zer) rays_[i].zero.set(c);
            return;
        }
        std::vector<Ray> next;
        for (int i : pos) next.push_back(rays_[i]);
        for (int i : zer) {
            rays_[i].zero.set(c);
            next.push_back(rays_[i]);
        }
        for (int p : pos)
            for (int q : neg) {
                if (!adjacent(p, q)) continue;
                Ray r;
                r.v.resize(n_ + 1);
                for (int i = 0; i <= n_; ++i)
                    r.v[i] = vals[p] * rays_[q].v[i] - vals[q] * rays_[p].v[i];
                normalize_ray(r.v);
                r.zero = Bits(total_);
                for (int cc = 0; cc <= c; ++cc)
                    if (eval(cc, r.v) == 0) r.zero.set(cc);
                next.push_back(std::move(r));
                if (next.size() > ray_cap)
                    throw BoundExceeded("tight span enumeration exceeded ray cap");
            }
        rays_ = std::move(next);
    }

    // Combinatorial adjacency: rays p,q are adjacent iff no third ray's
    // zero set contains zero(p) & zero(q).
    bool adjacent(int p, int q) const {
        Bits common = rays_[p].zero & rays_[q].zero;
        for (size_t i = 0; i < rays_.size(); ++i) {
            if (static_cast<int>(i) == p || static_cast<int>(i) == q) continue;
            if (common.subset_of(rays_[i].zero)) return false;
        }
        return true;
    }

    const FiniteMetric& m_;
    int n_;
    int total_ = 0;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<Ray> rays_;
};

void check_bound(const FiniteMetric& m, int bound) {
    if (m.size() > bound)
        throw BoundExceeded("metric has " + std::to_string(m.size()) +
                            " points, enumeration bound is " + std::to_string(bound));
}

}  // namespace

std::vector<std::vector<Rat>> tight_span_vertices(const FiniteMetric& m, int bound) {
    check_bound(m, bound);
    DoubleDescription dd(m);
    dd.run(200000);
    auto verts = dd.vertices();
    for (const auto& f : verts)
        if (!is_extremal(m, f)) throw std::logic_error("enumerated vertex fails extremality");
    return verts;
}

std::vector<TightSpanCell> tight_span_cells(const FiniteMetric& m, int bound) {
    auto verts = tight_span_vertices(m, bound);
    const int n = m.size();
    ConstraintSystem cs(n);
    std::vector<Bits> act;
    act.reserve(verts.size());
    for (const auto& f : verts) act.push_back(cs.active_set(m, f));

    auto closure = [&](const Bits& a) {
        Bits c(cs.count());
        c.fill();
        std::vector<int> members;
        for (size_t v = 0; v < act.size(); ++v)
            if (a.subset_of(act[v])) {
                c &= act[v];
                members.push_back(static_cast<int>(v));
            }
        return std::pair(c, members);
    };

    std::map<Bits, std::vector<int>> faces;  // active set -> spanning vertex ids
    std::vector<Bits> queue;
    for (const auto& a : act)
        if (faces.emplace(a, closure(a).second).second) queue.push_back(a);
    while (!queue.empty()) {
        Bits a = queue.back();
        queue.pop_back();
        for (const auto& b : act) {
            Bits meet = a & b;
            if (!cs.covers_all_points(meet)) continue;
            auto [closed, members] = closure(meet);
            if (faces.emplace(closed, members).second) queue.push_back(closed);
        }
    }

    std::vector<TightSpanCell> cells;
    for (const auto& [a, members] : faces) {
        TightSpanCell c;
        a.for_each([&](int idx) { c.tight_pairs.push_back(cs.pairs[idx]); });
        c.dim = n - cs.rank(a);
        c.vertex_ids = members;
        cells.push_back(std::move(c));
    }
    std::sort(cells.begin(), cells.end(), [](const TightSpanCell& a, const TightSpanCell& b) {
        return std::tie(a.dim, a.vertex_ids, a.tight_pairs) <
               std::tie(b.dim, b.vertex_ids, b.tight_pairs);
    });
    return cells;
}

int combinatorial_dimension(const FiniteMetric& m, int bound) {
    int dim = 0;
    for (const auto& c : tight_span_cells(m, bound)) dim = std::max(dim, c.dim);
    return dim;
}

namespace {

void gen_combinations(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(k);
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i <= n - (k - depth); ++i) {
            cur[depth] = i;
            self(self, i + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
}

// Perfect matchings of {0..size-1} as involution permutations.
void gen_involutions(int size, std::vector<std::vector<int>>& out) {
    std::vector<int> perm(size, -1);
    auto rec = [&](auto&& self) -> void {
        int a = -1;
        for (int i = 0; i < size; ++i)
            if (perm[i] < 0) {
                a = i;
                break;
            }
        if (a < 0) {
            out.push_back(perm);
            return;
        }
        for (int b = a + 1; b < size; ++b) {
            if (perm[b] >= 0) continue;
            perm[a] = b;
            perm[b] = a;
            self(self);
            perm[a] = perm[b] = -1;
        }
    };
    rec(rec);
}

void gen_derangements(int size, std::vector<std::vector<int>>& out) {
    std::vector<int> perm(size);
    std::vector<char> used(size, 0);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == size) {
            out.push_back(perm);
            return;
        }
        for (int v = 0; v < size; ++v) {
            if (used[v] || v == pos) continue;
            used[v] = 1;
            perm[pos] = v;
            self(self, pos + 1);
            used[v] = 0;
        }
    };
    rec(rec, 0);
}

struct DimTables {
    std::vector<std::vector<int>> involutions;
    std::vector<std::vector<int>> derangements;
};

// Checks one subset; returns the failing involution if any.
std::optional<std::vector<int>> check_subset(const FiniteMetric& m, const std::vector<int>& z,
                                             const DimTables& tables) {
    const int size = static_cast<int>(z.size());
    auto total = [&](const std::vector<int>& perm) {
        Rat s = 0;
        for (int p = 0; p < size; ++p) s += m.d(z[p], z[perm[p]]);
        return s;
    };
    for (const auto& inv : tables.involutions) {
        Rat si = total(inv);
        bool dominated = false;
        for (const auto& der : tables.derangements) {
            if (der == inv) continue;
            if (si <= total(der)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) return inv;
    }
    return std::nullopt;
}

}  // namespace

std::pair<bool, std::optional<DimWitness>> dim_at_most(const FiniteMetric& m, int k, Exec exec) {
    if (k < 1) throw InputError("dimension bound must be >= 1");
    const int size = 2 * (k + 1);
    if (m.size() < size) return {true, std::nullopt};
    DimTables tables;
    gen_involutions(size, tables.involutions);
    gen_derangements(size, tables.derangements);
    std::vector<std::vector<int>> subsets;
    gen_combinations(m.size(), size, subsets);

    const int count = static_cast<int>(subsets.size());
    std::vector<std::optional<std::vector<int>>> fail(count);
    if (exec == Exec::Serial) {
        for (int i = 0; i < count; ++i) {
            fail[i] = check_subset(m, subsets[i], tables);
            if (fail[i]) break;  // subsets come in canonical order
        }
    } else {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < count; ++i) fail[i] = check_subset(m, subsets[i], tables);
    }
    for (int i = 0; i < count; ++i)
        if (fail[i]) return {false, DimWitness{subsets[i], *fail[i]}};
    return {true, std::nullopt};
}

}  // namespace hellylab
