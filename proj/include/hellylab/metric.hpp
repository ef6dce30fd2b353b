#pragma once

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "hellylab/rational.hpp"

namespace hellylab {

// Whether data-parallel kernels run their OpenMP variant or the serial
// reference implementation. Results are identical; tests compare both.
enum class Exec { Serial, Parallel };

struct MetricViolation {
    enum class Kind { NotSquare, NegativeEntry, NonzeroDiagonal, Asymmetry, ZeroDistance, Triangle };
    Kind kind;
    int i = -1, j = -1, k = -1;
    Rat a, b, c;  // the values involved (triangle: d(i,k), d(i,j), d(j,k))
    std::string describe() const;
};

// Finite metric space with exact rational distances. Immutable after
// construction; all operations are pure.
class FiniteMetric {
public:
    static std::variant<FiniteMetric, MetricViolation> validate(
        std::vector<std::vector<Rat>> table, std::vector<std::string> labels = {});

    // Throws InputError on violation.
    static FiniteMetric require(std::vector<std::vector<Rat>> table,
                                std::vector<std::string> labels = {});

    int size() const { return n_; }
    const Rat& d(int i, int j) const { return dist_[i][j]; }
    const std::vector<Rat>& row(int i) const { return dist_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }

    Rat eccentricity(int i) const;
    Rat diameter() const;

    FiniteMetric scaled(const Rat& factor) const;

private:
    FiniteMetric(int n, std::vector<std::vector<Rat>> dist, std::vector<std::string> labels)
        : n_(n), dist_(std::move(dist)), labels_(std::move(labels)) {}
    int n_ = 0;
    std::vector<std::vector<Rat>> dist_;
    std::vector<std::string> labels_;
};

// Minimal delta >= 0 such that every quadruple satisfies
//   d(x,y) + d(z,t) <= max(d(x,z) + d(y,t), d(x,t) + d(y,z)) + delta.
Rat four_point_delta(const FiniteMetric& m, Exec exec = Exec::Parallel);

// Points p with d(a,p) + d(p,b) = d(a,b) for every pair {a,b} of the triple.
std::vector<int> median_set(const FiniteMetric& m, int x, int y, int z);

// {z : d(x,z) + d(z,y) = d(x,y)}
std::vector<int> interval(const FiniteMetric& m, int x, int y);

}  // namespace hellylab
