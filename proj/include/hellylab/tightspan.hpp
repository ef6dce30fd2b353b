#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hellylab/metric.hpp"

namespace hellylab {

// One polyhedral cell of the injective hull, identified by its pattern of
// tight constraints. A pair {x,x} records f(x) = 0.
struct TightSpanCell {
    std::vector<std::pair<int, int>> tight_pairs;  // sorted, x <= y
    int dim = 0;
    std::vector<int> vertex_ids;  // indices into the canonical vertex list
};

// All extremal functions whose tight-constraint system has full rank
// (the 0-cells of the hull), in lexicographic order. Enumeration runs a
// double-description sweep over the defining inequalities in exact
// rational arithmetic.
std::vector<std::vector<Rat>> tight_span_vertices(const FiniteMetric& m, int bound = 10);

// Every bounded face of the defining polyhedron: tight-pair patterns with
// nonempty relative interior, each with its dimension and spanning
// vertices. The 0-cells agree with tight_span_vertices.
std::vector<TightSpanCell> tight_span_cells(const FiniteMetric& m, int bound = 10);

// Max cell dimension.
int combinatorial_dimension(const FiniteMetric& m, int bound = 10);

struct DimWitness {
    std::vector<int> points;       // the violating set Z
    std::vector<int> involution;   // i as a permutation of positions in `points`
};

// 2(k+1)-point criterion, implemented exactly as printed: dimension <= k
// iff for every Z with |Z| = 2(k+1) and every fixed-point-free involution
// i on Z there is a fixed-point-free bijection j != i with
//   sum_z d(z, i(z)) <= sum_z d(z, j(z)).
// Returns the violating (Z, i) when false. Vacuously true when |X| < 2(k+1).
std::pair<bool, std::optional<DimWitness>> dim_at_most(const FiniteMetric& m, int k,
                                                       Exec exec = Exec::Parallel);

}  // namespace hellylab
