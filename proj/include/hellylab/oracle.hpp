#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hellylab/rational.hpp"

namespace hellylab {

// Lazy neighbor-function presentation of a possibly infinite, locally
// finite graph, explored through bounded windows. Vertex identifiers are
// opaque integer tuples.
struct GraphOracle {
    using Vertex = std::vector<int64_t>;
    Vertex basepoint;
    std::function<std::vector<Vertex>(const Vertex&)> neighbors;  // deterministic, sorted
};

// Z^d with an edge when all coordinates differ by at most 1.
GraphOracle king_oracle(int dims);

// Infinite d-regular tree; vertices are label paths from the root.
GraphOracle tree_oracle(int degree);

// Vertex self-map given with its inverse.
struct OracleMap {
    std::function<GraphOracle::Vertex(const GraphOracle::Vertex&)> forward;
    std::function<GraphOracle::Vertex(const GraphOracle::Vertex&)> backward;
};

// Coordinate maps on Z^d of the form x -> (x_{p(1)} + c_1, ..., x_{p(d)} + c_d).
// Spec strings look like "x2+1,x3,x1" (1-based coordinate names).
OracleMap parse_king_map(const std::string& spec, int dims);

// Left multiplication by a word over the involution generators of the
// d-regular tree, e.g. "01" translates along the 0-1 axis with length 2.
OracleMap parse_tree_map(const std::string& spec, int degree);

// Distance between two oracle vertices by bidirectional BFS, with both
// frontiers capped at max_radius hops. nullopt when the search windows
// are exhausted before meeting.
std::optional<int> oracle_distance(const GraphOracle& o, const GraphOracle::Vertex& a,
                                   const GraphOracle::Vertex& b, int max_radius);

struct TranslationResult {
    Rat estimate;               // d_horizon / horizon (last defined prefix on exhaustion)
    bool certified = false;     // arithmetic progression d_{a n} = n L detected
    int period = 0;             // a
    long increment = 0;         // L
    Rat length;                 // L / a when certified, otherwise the estimate
    bool window_exhausted = false;
    std::vector<int> orbit_distances;  // d(g^k v, v) for k = 1..horizon (-1 if unknown)
};

// Computes d(g^k v, v) for k = 1..horizon at the oracle basepoint and
// certifies the translation length when the exact progression of the
// automorphism classification holds for some period a <= 2 * dim_bound.
TranslationResult translation_length(const GraphOracle& o, const OracleMap& map, int dim_bound,
                                     int horizon, int window_radius = 12);

}  // namespace hellylab
