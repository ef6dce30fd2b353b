#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hellylab/graph.hpp"

namespace hellylab {

// A graph with a family of generalized cells (vertex subsets). The family
// must cover every vertex; edge coverage is reported, not required.
struct CellComplexSpec {
    SimpleGraph graph;
    std::vector<Bits> cells;

    static CellComplexSpec checked(SimpleGraph g, std::vector<Bits> cells);
};

// Edge between distinct vertices contained in a common cell.
SimpleGraph thickening(const CellComplexSpec& c);

struct CellHellyReport {
    bool family_helly = true;
    std::vector<int> helly_witness;          // indices of a violating subfamily
    bool flag_condition = true;
    std::optional<std::array<int, 3>> flag_witness;  // pairwise-intersecting triple
    bool no_infinite_chains = true;          // trivially true on finite input
    bool cells_connected = true;
    std::optional<int> disconnected_cell;
    bool intersections_connected = true;
    std::optional<std::pair<int, int>> disconnected_intersection;
    bool edges_covered = true;
    // Simple-connectedness of the complex and of cell intersections is an
    // assumption of the cell-Helly criterion that this checker does not
    // verify; the flag records the gap.
    bool simple_connectedness_assumed = true;

    bool all_checked_pass() const {
        return family_helly && flag_condition && no_infinite_chains && cells_connected &&
               intersections_connected;
    }
};

CellHellyReport cell_helly_check(const CellComplexSpec& c);

// Canonical deterministic generators.
SimpleGraph gen_cycle(int n);
SimpleGraph gen_path(int n);
SimpleGraph gen_complete(int n);
SimpleGraph gen_star(int leaves);
SimpleGraph gen_king(const std::vector<int>& dims);
SimpleGraph gen_grid(const std::vector<int>& dims);
SimpleGraph gen_sun();  // 3-sun
SimpleGraph gen_random_tree(int n, uint64_t seed);

// Named cell-complex fixtures: "cube" (single 3-cube with all faces),
// "two-squares", "corner3" (three squares at a cube corner),
// "tree-of-squares".
CellComplexSpec gen_cube_complex(const std::string& name);

}  // namespace hellylab
