#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hellylab/bitset.hpp"
#include "hellylab/graph.hpp"

namespace hellylab {

// All integer extremal functions of an integer-valued metric:
//   f(x) = max_y (D[x][y] - f(y)),  0 <= f(x) <= max_y D[x][y].
// Backtracking over vertices in the given order with interval propagation;
// results in lexicographic order. This is the Helly hull vertex set when D
// is a graph metric, and the subdivision vertex set for scaled metrics.
std::vector<std::vector<int>> integer_extremal_functions(
    const std::vector<std::vector<int>>& dist, const std::vector<int>& order,
    size_t solution_cap = 200000);

struct HullResult {
    SimpleGraph hull;                          // edges exactly at sup-distance 1
    std::vector<std::vector<int>> functions;   // hull vertex -> extremal function
    std::vector<int> embedding;                // original vertex -> hull vertex
};

// Helly hull of a connected graph (vertex set per the integer extremal
// characterization, edges at sup-distance exactly 1).
HullResult helly_hull(const SimpleGraph& g, int bound = 12);

enum class IsHellyMethod { HullEquality, BergeTriples, BruteForce };

struct BallId {
    int center;
    int radius;
};

struct HellyVerdict {
    bool helly = true;
    // On failure: a pairwise-intersecting ball family with empty intersection.
    std::vector<BallId> witness;
};

// Three independent recognition routes:
//  - HullEquality: every integer extremal function equals some e(x).
//  - BergeTriples: classical triple criterion over the family of all balls.
//  - BruteForce: direct search for a pairwise-intersecting ball family with
//    empty intersection (graphs of at most `brute_bound` vertices).
HellyVerdict is_helly(const SimpleGraph& g, IsHellyMethod method, int hull_bound = 12,
                      int brute_bound = 8, Exec exec = Exec::Parallel);

struct CliqueHellyVerdict {
    bool clique_helly = true;
    std::vector<Bits> witness;  // pairwise-intersecting maximal cliques, empty intersection
};

CliqueHellyVerdict is_clique_helly(const SimpleGraph& g);

// Intersection of all balls containing s (a closure operator).
Bits ball_closure(const SimpleGraph& g, const std::vector<std::vector<int>>& dist, const Bits& s);

struct RoundCliquePoset {
    std::vector<Bits> cliques;                      // canonical order: by size, then members
    std::vector<std::pair<int, int>> hasse;         // (i, j) with clique_i covered by clique_j
    bool input_helly = true;                        // warning flag when false
    bool descriptions_agree = true;                 // ball-closed vs maximal-clique-intersection
};

// All round cliques ordered by inclusion, computed both as ball-closed
// cliques and via X ∪ {nonempty intersections of maximal cliques}. The two
// descriptions must agree on Helly inputs; off the Helly class the
// ball-closure description is returned and the flag records disagreement.
RoundCliquePoset round_cliques(const SimpleGraph& g);

// Halving-radius iteration. Requires a Helly input; the result is a round
// clique contained in every ball containing k.
Bits circumclique(const SimpleGraph& g, const Bits& k);

// max over hull vertices f of min over x of d_inf(f, e(x)).
int coarse_helly_gap(const SimpleGraph& g, int bound = 12);

// Interval-level proxy for geodesic stability: max over (x,y,z) with
// d(y,z) = 1 of the one-sided Hausdorff distance from I(x,y) to I(x,z).
int interval_stability_bound(const SimpleGraph& g, Exec exec = Exec::Parallel);

}  // namespace hellylab
