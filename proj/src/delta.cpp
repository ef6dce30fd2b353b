#include "hellylab/delta.hpp"

#include <algorithm>
#include <stdexcept>

#include "hellylab/errors.hpp"

namespace hellylab {

std::vector<Rat> kuratowski(const FiniteMetric& m, int x) {
    if (x < 0 || x >= m.size()) throw InputError("point index out of range");
    return m.row(x);
}

std::vector<Rat> star(const FiniteMetric& m, const std::vector<Rat>& f) {
    const int n = m.size();
    std::vector<Rat> s(n);
    for (int x = 0; x < n; ++x) {
        Rat best = m.d(x, 0) - f[0];
        for (int z = 1; z < n; ++z) best = std::max(best, Rat(m.d(x, z) - f[z]));
        s[x] = best;
    }
    return s;
}

Rat sup_dist(const std::vector<Rat>& f, const std::vector<Rat>& g) {
    Rat d = 0;
    for (size_t i = 0; i < f.size(); ++i) d = std::max(d, Rat(abs(f[i] - g[i])));
    return d;
}

bool in_delta(const FiniteMetric& m, const std::vector<Rat>& f) {
    const int n = m.size();
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y)
            if (f[x] + f[y] < m.d(x, y)) return false;
    return true;
}

bool is_extremal(const FiniteMetric& m, const std::vector<Rat>& f) {
    auto s = star(m, f);
    return s == f;
}

FunctionClass classify_function(const FiniteMetric& m, const std::vector<Rat>& f) {
    const int n = m.size();
    if (static_cast<int>(f.size()) != n) throw InputError("function length does not match point count");
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y)
            if (f[x] + f[y] < m.d(x, y)) return NotInDelta{x, y};
    auto s = star(m, f);
    for (int x = 0; x < n; ++x) {
        Rat target = std::max(s[x], Rat(0));
        if (target < f[x]) {
            auto g = f;
            g[x] = target;
            return InDeltaNotExtremal{std::move(g), x};
        }
    }
    // Max-equation holds everywhere; re-check 1-Lipschitzness explicitly.
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (abs(f[x] - f[y]) > m.d(x, y))
                throw std::logic_error("extremal function fails 1-Lipschitz check");
    return Extremal{};
}

std::vector<Rat> q_step(const FiniteMetric& m, const std::vector<Rat>& f) {
    if (!in_delta(m, f)) throw InputError("q_step requires a function in Delta(X)");
    auto s = star(m, f);
    std::vector<Rat> q(f.size());
    for (size_t i = 0; i < f.size(); ++i) q[i] = (f[i] + s[i]) / 2;
    return q;
}

ProjectionResult project_to_tight_span(const FiniteMetric& m, std::vector<Rat> f, int max_iter) {
    if (max_iter < 1) throw InputError("max_iter must be >= 1");
    if (!in_delta(m, f)) throw InputError("projection requires a function in Delta(X)");
    ProjectionResult res;
    std::vector<Rat> prev;
    for (int it = 0; it <= max_iter; ++it) {
        if (is_extremal(m, f)) {
            res.value = std::move(f);
            res.exact = true;
            res.iterations = it;
            return res;
        }
        if (it == max_iter) break;
        auto s = star(m, f);
        prev = f;
        for (size_t i = 0; i < f.size(); ++i) f[i] = (f[i] + s[i]) / 2;
    }
    res.value = f;
    res.exact = false;
    res.iterations = max_iter;
    res.gap.resize(f.size());
    for (size_t i = 0; i < f.size(); ++i) res.gap[i] = 2 * (prev[i] - f[i]);
    return res;
}

}  // namespace hellylab
