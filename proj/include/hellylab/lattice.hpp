#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hellylab/graph.hpp"
#include "hellylab/helly.hpp"

namespace hellylab {

// Finite window into a lattice L carrying an order-preserving cofinal
// Z-action (the shift). Operations certify only what the window exhibits;
// starvation fails loudly instead of extrapolating.
struct LatticeWindow {
    std::vector<std::string> names;
    std::vector<Bits> leq;                   // leq[a].test(b) iff a <= b
    std::vector<std::optional<int>> up;      // x -> x + 1 within the window
    std::vector<std::optional<int>> down;    // x -> x - 1 within the window
    // Largest t such that every shift of x by at most t steps (either way)
    // stays in the window together with its full interval; supplied by the
    // builder from knowledge of the ambient object.
    std::vector<int> depth;

    int size() const { return static_cast<int>(names.size()); }
};

// Integer box [0, extent]^dims with the componentwise order and the
// diagonal shift.
LatticeWindow zd_window(int dims, int extent);

// Braid-group window {g : Delta^{-k} <= g <= Delta^k} for the left order,
// shift = right multiplication by Delta. For k = 1 the window is the weak
// order on the six simples translated across one Delta-interval.
LatticeWindow b3_window(int k);

struct LatticeGraphResult {
    SimpleGraph graph;              // on the whole window; x ~ y iff x-1 <= y <= x+1
    Bits core;                      // vertices with depth >= 1 (full neighbor set present)
    bool distance_check = true;     // graph distance == order distance on checkable pairs
    std::optional<std::pair<int, int>> distance_failure;
    HellyVerdict interior_helly;    // is_helly on the induced core subgraph
    std::vector<int> core_index;    // window vertex -> core subgraph vertex (-1 outside)
    SimpleGraph core_graph;
};

// Builds the window graph with x ~ y iff x-1 <= y <= x+1, verifies that
// graph distance matches d(x,y) = min{t : x - t <= y <= x + t} wherever a
// geodesic provably stays inside, and checks Hellyness of the core.
// Throws InputError (WindowTooSmall) when the core is empty.
LatticeGraphResult lattice_to_graph(const LatticeWindow& w);

}  // namespace hellylab
