#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hellylab/graph.hpp"
#include "hellylab/helly.hpp"

namespace hellylab {

struct SubdivisionResult {
    SimpleGraph graph;
    int scale = 2;  // 2 * N!
    // For N = 1 every subdivision vertex is a round clique of the input;
    // in general it is an extremal function of the scaled metric.
    std::vector<std::vector<int>> functions;   // scaled integer extremal functions
    std::vector<std::optional<Bits>> meaning;  // round-clique rendering (N = 1 only)
    std::vector<int> embedding;                // input vertex -> subdivision vertex
};

// Vertex set = round cliques; sigma ~ tau iff they intersect and their
// union is a clique. Requires a Helly input; the embedding x -> {x} is
// 2-homothetic.
SubdivisionResult first_subdivision(const SimpleGraph& g);

// Extremal-function construction on the metric (V, 2*N! * d), edges at
// sup-distance 1 in scaled units. Graph-isomorphic to first_subdivision
// when N = 1.
SubdivisionResult nth_subdivision(const SimpleGraph& g, int n_factor, int bound = 24);

// Round clique corresponding to a scaled extremal function f (scale 2):
// the intersection of the balls B(x, ceil(f(x)/2)).
Bits round_clique_of_scaled_function(const SimpleGraph& g,
                                     const std::vector<std::vector<int>>& dist,
                                     const std::vector<int>& f);

struct GraphAutomorphism {
    std::vector<int> forward;
    std::vector<int> backward;

    // Throws InputError unless the maps are mutually inverse bijections
    // preserving adjacency both ways.
    static GraphAutomorphism checked(const SimpleGraph& g, std::vector<int> forward);
};

struct EllipticCertificate {
    Bits stabilized_round_clique;
    int fixed_subdivision_vertex;  // index into first_subdivision(g).graph
};

// Finite Helly graphs admit no unbounded orbits, so every automorphism is
// elliptic; the certificate is the circumclique of a vertex orbit together
// with the corresponding fixed vertex of the first subdivision.
EllipticCertificate classify_automorphism(const SimpleGraph& g, const GraphAutomorphism& a);

// Induced permutation on the vertices of the first subdivision.
std::vector<int> induced_subdivision_automorphism(const SimpleGraph& g,
                                                  const SubdivisionResult& sub,
                                                  const GraphAutomorphism& a);

}  // namespace hellylab
