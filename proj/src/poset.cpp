#include "hellylab/poset.hpp"

#include <algorithm>
#include <deque>

#include "hellylab/errors.hpp"

namespace hellylab {

Poset Poset::from_hasse(std::vector<std::string> elements,
                        const std::vector<std::pair<int, int>>& less_than) {
    Poset p;
    p.n_ = static_cast<int>(elements.size());
    p.names_ = std::move(elements);
    p.leq_.assign(p.n_, Bits(p.n_));
    for (int i = 0; i < p.n_; ++i) p.leq_[i].set(i);
    std::vector<std::vector<int>> up(p.n_);
    for (auto [a, b] : less_than) {
        if (a < 0 || b < 0 || a >= p.n_ || b >= p.n_) throw InputError("relation index out of range");
        if (a == b) throw InputError("relation " + p.names_[a] + " < " + p.names_[a] + " is reflexive");
        up[a].push_back(b);
    }
    // transitive closure by repeated propagation
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < p.n_; ++a)
            for (int b : up[a]) {
                Bits merged = p.leq_[a] | p.leq_[b];
                if (!(merged == p.leq_[a])) {
                    p.leq_[a] = merged;
                    changed = true;
                }
            }
    }
    for (int a = 0; a < p.n_; ++a)
        for (int b = a + 1; b < p.n_; ++b)
            if (p.leq(a, b) && p.leq(b, a))
                throw InputError("order cycle between " + p.names_[a] + " and " + p.names_[b]);

    // Hasse: covers of the closure.
    for (int a = 0; a < p.n_; ++a)
        for (int b = 0; b < p.n_; ++b) {
            if (a == b || !p.leq(a, b)) continue;
            bool cover = true;
            for (int m = 0; m < p.n_ && cover; ++m)
                if (m != a && m != b && p.leq(a, m) && p.leq(m, b)) cover = false;
            if (cover) p.hasse_.emplace_back(a, b);
        }

    // Gradedness: longest vs shortest maximal-chain length between each
    // comparable pair (computed on the cover relation).
    std::vector<std::vector<int>> cover(p.n_);
    for (auto [a, b] : p.hasse_) cover[a].push_back(b);
    for (int s = 0; s < p.n_ && p.graded_; ++s) {
        std::vector<int> longest(p.n_, -1), shortest(p.n_, -1);
        longest[s] = shortest[s] = 0;
        // relax in topological order: vertices sorted by closure size
        std::vector<int> order(p.n_);
        for (int i = 0; i < p.n_; ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](int x, int y) { return p.leq_[y].subset_of(p.leq_[x]); });
        for (int u : order) {
            if (longest[u] < 0) continue;
            for (int v : cover[u]) {
                longest[v] = std::max(longest[v], longest[u] + 1);
                shortest[v] = shortest[v] < 0 ? shortest[u] + 1 : std::min(shortest[v], shortest[u] + 1);
            }
        }
        for (int t = 0; t < p.n_; ++t)
            if (longest[t] >= 0 && longest[t] != shortest[t]) p.graded_ = false;
    }
    return p;
}

Poset Poset::reversed() const {
    std::vector<std::pair<int, int>> rev;
    for (auto [a, b] : hasse_) rev.emplace_back(b, a);
    return from_hasse(names_, rev);
}

namespace {

// Greatest element of `set` within the subposet, if any.
std::optional<int> greatest(const Poset& p, const std::vector<int>& set) {
    for (int cand : set) {
        bool ok = true;
        for (int other : set)
            if (!p.leq(other, cand)) {
                ok = false;
                break;
            }
        if (ok) return cand;
    }
    return std::nullopt;
}

std::optional<int> least(const Poset& p, const std::vector<int>& set) {
    for (int cand : set) {
        bool ok = true;
        for (int other : set)
            if (!p.leq(cand, other)) {
                ok = false;
                break;
            }
        if (ok) return cand;
    }
    return std::nullopt;
}

std::vector<int> common_lower(const Poset& p, const std::vector<int>& sub, int a, int b) {
    std::vector<int> out;
    for (int x : sub)
        if (p.leq(x, a) && p.leq(x, b)) out.push_back(x);
    return out;
}

std::vector<int> common_upper(const Poset& p, const std::vector<int>& sub, int a, int b) {
    std::vector<int> out;
    for (int x : sub)
        if (p.leq(a, x) && p.leq(b, x)) out.push_back(x);
    return out;
}

}  // namespace

PosetReport poset_check(const Poset& p) {
    PosetReport rep;
    rep.graded = p.graded();
    const int n = p.size();

    // Bowties: a,b <= c,d, pairwise distinct, a||b, c||d, nothing strictly between.
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (p.leq(a, b) || p.leq(b, a)) continue;
            for (int c = 0; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    if (c == a || c == b || d == a || d == b) continue;
                    if (p.leq(c, d) || p.leq(d, c)) continue;
                    if (!(p.leq(a, c) && p.leq(a, d) && p.leq(b, c) && p.leq(b, d))) continue;
                    bool blocked = false;
                    for (int x = 0; x < n && !blocked; ++x) {
                        if (x == a || x == b || x == c || x == d) continue;
                        if (p.leq(a, x) && p.leq(b, x) && p.leq(x, c) && p.leq(x, d)) blocked = true;
                    }
                    if (!blocked) rep.bowties.push_back({a, b, c, d});
                }
        }

    // Lattice: every pair needs a meet and a join in the whole poset.
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    for (int a = 0; a < n && rep.is_lattice; ++a)
        for (int b = a + 1; b < n && rep.is_lattice; ++b) {
            if (!greatest(p, common_lower(p, all, a, b)) || !least(p, common_upper(p, all, a, b))) {
                rep.is_lattice = false;
                rep.lattice_failure = {a, b};
            }
        }

    // Local flag conditions.
    for (int x = 0; x < n; ++x) {
        std::vector<int> up, down;
        for (int y = 0; y < n; ++y) {
            if (p.leq(x, y)) up.push_back(y);
            if (p.leq(y, x)) down.push_back(y);
        }
        // P_{>=x}: flag meet-semilattice
        for (size_t i = 0; i < up.size(); ++i)
            for (size_t j = i + 1; j < up.size(); ++j) {
                auto lower = common_lower(p, up, up[i], up[j]);
                if (!greatest(p, lower))
                    rep.up_flag_failures.push_back({x, FlagFailure::Kind::PairWithoutMeet,
                                                    {up[i], up[j]}});
            }
        for (size_t i = 0; i < up.size(); ++i)
            for (size_t j = i + 1; j < up.size(); ++j)
                for (size_t k = j + 1; k < up.size(); ++k) {
                    int a = up[i], b = up[j], c = up[k];
                    auto bounded = [&](int u, int v) { return !common_upper(p, up, u, v).empty(); };
                    if (!(bounded(a, b) && bounded(b, c) && bounded(a, c))) continue;
                    bool has_upper = false;
                    for (int u : up)
                        if (p.leq(a, u) && p.leq(b, u) && p.leq(c, u)) has_upper = true;
                    if (!has_upper)
                        rep.up_flag_failures.push_back({x, FlagFailure::Kind::TripleWithoutBound,
                                                        {a, b, c}});
                }
        // P_{<=x}: flag join-semilattice
        for (size_t i = 0; i < down.size(); ++i)
            for (size_t j = i + 1; j < down.size(); ++j) {
                auto upper = common_upper(p, down, down[i], down[j]);
                if (!least(p, upper))
                    rep.down_flag_failures.push_back({x, FlagFailure::Kind::PairWithoutJoin,
                                                      {down[i], down[j]}});
            }
        for (size_t i = 0; i < down.size(); ++i)
            for (size_t j = i + 1; j < down.size(); ++j)
                for (size_t k = j + 1; k < down.size(); ++k) {
                    int a = down[i], b = down[j], c = down[k];
                    auto bounded = [&](int u, int v) { return !common_lower(p, down, u, v).empty(); };
                    if (!(bounded(a, b) && bounded(b, c) && bounded(a, c))) continue;
                    bool has_lower = false;
                    for (int u : down)
                        if (p.leq(u, a) && p.leq(u, b) && p.leq(u, c)) has_lower = true;
                    if (!has_lower)
                        rep.down_flag_failures.push_back({x, FlagFailure::Kind::TripleWithoutBound,
                                                          {a, b, c}});
                }
    }
    return rep;
}

ChainComplex orthoscheme_chains(const Poset& p, size_t cap) {
    ChainComplex cc;
    const int n = p.size();
    std::vector<std::vector<int>> above(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (p.less(a, b)) above[a].push_back(b);
    std::vector<int> chain;
    auto extend = [&](auto&& self, int last) -> void {
        for (int next : above[last]) {
            chain.push_back(next);
            cc.simplices.push_back(chain);
            if (cc.simplices.size() > cap) throw BoundExceeded("chain enumeration exceeded cap");
            self(self, next);
            chain.pop_back();
        }
    };
    for (int v = 0; v < n; ++v) {
        chain = {v};
        cc.simplices.push_back(chain);
        extend(extend, v);
    }
    size_t maxlen = 0;
    for (const auto& s : cc.simplices) maxlen = std::max(maxlen, s.size());
    cc.f_vector.assign(maxlen, 0);
    for (const auto& s : cc.simplices) ++cc.f_vector[s.size() - 1];
    std::sort(cc.simplices.begin(), cc.simplices.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    return cc;
}

}  // namespace hellylab
