#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hellylab/bitset.hpp"
#include "hellylab/metric.hpp"

namespace hellylab {

// Simple undirected graph on vertices 0..n-1, adjacency kept sorted.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n) : n_(n), adj_(n) {}

    // Throws InputError on loops or out-of-range endpoints; duplicate
    // edges are deduplicated.
    static SimpleGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int size() const { return n_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const;
    std::vector<std::pair<int, int>> edges() const;
    int edge_count() const;

    void add_edge(int u, int v);

    bool connected() const;
    // A pair of vertices in different components, if any.
    std::optional<std::pair<int, int>> disconnected_witness() const;

    // BFS distances from src; -1 for unreachable.
    std::vector<int> bfs_from(int src) const;
    // All-pairs BFS distance matrix. Throws InputError if disconnected.
    std::vector<std::vector<int>> distance_matrix() const;

    std::vector<int> bfs_order(int src = 0) const;

    // Closed ball as a bitset, given a precomputed distance matrix.
    static Bits ball(const std::vector<std::vector<int>>& dist, int n, int center, int radius);

    bool operator==(const SimpleGraph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    std::vector<std::vector<int>> adj_;
};

// Shortest-path metric of a connected graph (Def-level: the combinatorial
// distance), along with eccentricities and the diameter.
struct GraphMetric {
    std::vector<std::vector<int>> dist;
    std::vector<int> ecc;
    int diameter = 0;
};
GraphMetric graph_metric(const SimpleGraph& g);

// The combinatorial distance as a FiniteMetric (entries integral).
FiniteMetric graph_distance_matrix(const SimpleGraph& g);

// All maximal cliques (Bron-Kerbosch with pivoting), canonical order.
std::vector<Bits> maximal_cliques(const SimpleGraph& g, size_t cap = 200000);

// Every nonempty clique, canonical order. Guarded by a cap.
std::vector<Bits> all_cliques(const SimpleGraph& g, size_t cap = 2000000);

}  // namespace hellylab
