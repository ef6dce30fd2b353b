#include "hellylab/metric.hpp"

#include <algorithm>
#include <sstream>

#include "hellylab/errors.hpp"

namespace hellylab {

std::optional<Rat> parse_rat(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) return std::nullopt;
    auto digits_ok = [](const std::string& t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!digits_ok(s)) return std::nullopt;
        Rat r(s);
        r.canonicalize();
        return r;
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!digits_ok(num) || !digits_ok(den)) return std::nullopt;
    mpz_class d(den);
    if (d == 0) return std::nullopt;
    Rat r(mpz_class(num), d);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string rat_vector_str(const std::vector<Rat>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += rat_str(v[i]);
    }
    return s + ")";
}

std::string MetricViolation::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::NotSquare:
            os << "table is not square (row " << i << " has " << j << " entries, expected " << k << ")";
            break;
        case Kind::NegativeEntry:
            os << "negative entry d(" << i << "," << j << ") = " << rat_str(a);
            break;
        case Kind::NonzeroDiagonal:
            os << "nonzero diagonal d(" << i << "," << i << ") = " << rat_str(a);
            break;
        case Kind::Asymmetry:
            os << "asymmetry d(" << i << "," << j << ") = " << rat_str(a) << " but d(" << j << "," << i
               << ") = " << rat_str(b);
            break;
        case Kind::ZeroDistance:
            os << "zero distance between distinct points " << i << " and " << j;
            break;
        case Kind::Triangle:
            os << "triangle violation d(" << i << "," << k << ") = " << rat_str(a) << " > d(" << i << ","
               << j << ") + d(" << j << "," << k << ") = " << rat_str(b) << " + " << rat_str(c);
            break;
    }
    return os.str();
}

std::variant<FiniteMetric, MetricViolation> FiniteMetric::validate(
    std::vector<std::vector<Rat>> table, std::vector<std::string> labels) {
    const int n = static_cast<int>(table.size());
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(table[i].size()) != n)
            return MetricViolation{MetricViolation::Kind::NotSquare, i, static_cast<int>(table[i].size()), n};
    for (int i = 0; i < n; ++i) {
        if (table[i][i] != 0)
            return MetricViolation{MetricViolation::Kind::NonzeroDiagonal, i, i, -1, table[i][i]};
        for (int j = 0; j < n; ++j) {
            if (table[i][j] < 0)
                return MetricViolation{MetricViolation::Kind::NegativeEntry, i, j, -1, table[i][j]};
            if (table[i][j] != table[j][i])
                return MetricViolation{MetricViolation::Kind::Asymmetry, i, j, -1, table[i][j], table[j][i]};
            if (i != j && table[i][j] == 0)
                return MetricViolation{MetricViolation::Kind::ZeroDistance, i, j};
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (table[i][k] > table[i][j] + table[j][k])
                    return MetricViolation{MetricViolation::Kind::Triangle, i, j, k,
                                           table[i][k], table[i][j], table[j][k]};
    if (labels.empty()) {
        labels.reserve(n);
        for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    }
    if (static_cast<int>(labels.size()) != n)
        return MetricViolation{MetricViolation::Kind::NotSquare, -1, static_cast<int>(labels.size()), n};
    return FiniteMetric(n, std::move(table), std::move(labels));
}

FiniteMetric FiniteMetric::require(std::vector<std::vector<Rat>> table,
                                   std::vector<std::string> labels) {
    auto v = validate(std::move(table), std::move(labels));
    if (auto* viol = std::get_if<MetricViolation>(&v)) throw InputError(viol->describe());
    return std::get<FiniteMetric>(std::move(v));
}

Rat FiniteMetric::eccentricity(int i) const {
    Rat e = 0;
    for (int j = 0; j < n_; ++j) e = std::max(e, dist_[i][j]);
    return e;
}

Rat FiniteMetric::diameter() const {
    Rat d = 0;
    for (int i = 0; i < n_; ++i) d = std::max(d, eccentricity(i));
    return d;
}

FiniteMetric FiniteMetric::scaled(const Rat& factor) const {
    auto t = dist_;
    for (auto& row : t)
        for (auto& x : row) x *= factor;
    return FiniteMetric(n_, std::move(t), labels_);
}

namespace {

// Defect of one quadruple: largest pair-sum minus second largest.
Rat quadruple_defect(const FiniteMetric& m, int x, int y, int z, int t) {
    Rat s1 = m.d(x, y) + m.d(z, t);
    Rat s2 = m.d(x, z) + m.d(y, t);
    Rat s3 = m.d(x, t) + m.d(y, z);
    if (s1 < s2) std::swap(s1, s2);
    if (s1 < s3) std::swap(s1, s3);
    Rat second = std::max(s2, s3);
    return s1 - second;
}

Rat four_point_delta_serial(const FiniteMetric& m) {
    const int n = m.size();
    Rat best = 0;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            for (int z = y + 1; z < n; ++z)
                for (int t = z + 1; t < n; ++t)
                    best = std::max(best, quadruple_defect(m, x, y, z, t));
    return best;
}

Rat four_point_delta_parallel(const FiniteMetric& m) {
    const int n = m.size();
    std::vector<Rat> per_x(n, Rat(0));
#pragma omp parallel for schedule(dynamic)
    for (int x = 0; x < n; ++x) {
        Rat best = 0;
        for (int y = x + 1; y < n; ++y)
            for (int z = y + 1; z < n; ++z)
                for (int t = z + 1; t < n; ++t)
                    best = std::max(best, quadruple_defect(m, x, y, z, t));
        per_x[x] = best;
    }
    Rat best = 0;
    for (const auto& r : per_x) best = std::max(best, r);
    return best;
}

}  // namespace

Rat four_point_delta(const FiniteMetric& m, Exec exec) {
    return exec == Exec::Serial ? four_point_delta_serial(m) : four_point_delta_parallel(m);
}

std::vector<int> median_set(const FiniteMetric& m, int x, int y, int z) {
    std::vector<int> out;
    for (int p = 0; p < m.size(); ++p) {
        if (m.d(x, p) + m.d(p, y) == m.d(x, y) && m.d(y, p) + m.d(p, z) == m.d(y, z) &&
            m.d(x, p) + m.d(p, z) == m.d(x, z))
            out.push_back(p);
    }
    return out;
}

std::vector<int> interval(const FiniteMetric& m, int x, int y) {
    std::vector<int> out;
    for (int z = 0; z < m.size(); ++z)
        if (m.d(x, z) + m.d(z, y) == m.d(x, y)) out.push_back(z);
    return out;
}

}  // namespace hellylab
